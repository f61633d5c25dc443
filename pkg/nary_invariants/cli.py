# Copyright (C) 2024 Callum Dickinson
#
# nary-invariants is free software: you can redistribute it and/or modify it under the terms of
# the GNU General Public License as published by the Free Software Foundation,
# either version 3 of the License, or (at your option) any later version.
#
# nary-invariants is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY;
# without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.
# See the GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License along with nary-invariants.
# If not, see <https://www.gnu.org/licenses/>.


"""
Command line interface.
"""

from __future__ import annotations

import functools
import logging

from contextlib import contextmanager
from pathlib import Path
from typing import TYPE_CHECKING, Any, Callable, Dict, List, cast

import click

from pydantic import ValidationError

from . import __version__
from .cache import SeriesCache
from .config import DEFAULT_LIMITS, JobSpec, Limits
from .exceptions import (
    InvalidParameterError,
    InvariantsError,
    NegativeDimensionError,
    ResourceLimitError,
)
from .poincare import nu, nu_constant_term, series_truncated, sylvester_cayley_binary
from .render import (
    CheckReport,
    CheckRow,
    render_check,
    render_dimension,
    render_orbit,
    render_series,
)
from .types import Backend, OutputFormat
from .weyl import aggregate_orbit

if TYPE_CHECKING:
    from typing import Iterator, Optional

    from .types import SeriesTruncation

CACHE_ENVVAR = "NARY_INVARIANTS_CACHE"

EXIT_RESOURCE_LIMIT = 3
EXIT_CHECK_MISMATCH = 4


class ResourceLimitExceeded(click.ClickException):
    """
    Error raised when a computation hits one of the configured resource limits.
    """

    exit_code = EXIT_RESOURCE_LIMIT


@contextmanager
def _handle_errors() -> Iterator[None]:
    try:
        yield
    except InvalidParameterError as err:
        raise click.UsageError(str(err)) from None
    except ResourceLimitError as err:
        raise ResourceLimitExceeded(str(err)) from None
    except InvariantsError as err:
        raise click.ClickException(str(err)) from None


def _job(**kwargs: Any) -> JobSpec:
    try:
        return JobSpec(**kwargs)
    except ValidationError as err:
        raise click.UsageError(
            "; ".join(
                f"{'.'.join(str(loc) for loc in error['loc'])}: {error['msg']}"
                for error in err.errors()
            ),
        ) from None


def _format_option(func: Callable[..., Any]) -> Callable[..., Any]:
    return click.option(
        "--format",
        "fmt",
        type=click.Choice([f.value for f in OutputFormat]),
        default=OutputFormat.plain.value,
        show_default=True,
        help="Output format.",
    )(func)


def _limit_options(func: Callable[..., Any]) -> Callable[..., Any]:
    @click.option(
        "--max-rank",
        type=int,
        default=DEFAULT_LIMITS.max_rank,
        show_default=True,
        help="Largest number of variables whose Weyl group (of order n!) may be enumerated.",
    )
    @click.option(
        "--max-dp-cells",
        type=int,
        default=DEFAULT_LIMITS.max_dp_cells,
        show_default=True,
        help="Largest dynamic programming table of the counting backends.",
    )
    @click.option(
        "--max-oracle-nodes",
        type=int,
        default=DEFAULT_LIMITS.max_oracle_nodes,
        show_default=True,
        help="Largest estimated search space of the brute-force oracle.",
    )
    @functools.wraps(func)
    def wrapper(
        *args: Any,
        max_rank: int,
        max_dp_cells: int,
        max_oracle_nodes: int,
        **kwargs: Any,
    ) -> Any:
        try:
            limits = Limits(
                max_rank=max_rank,
                max_dp_cells=max_dp_cells,
                max_oracle_nodes=max_oracle_nodes,
            )
        except ValidationError as err:
            raise click.UsageError(f"Invalid resource limits: {err}") from None
        return func(*args, limits=limits, **kwargs)

    return wrapper


def _cache_option(func: Callable[..., Any]) -> Callable[..., Any]:
    return click.option(
        "--cache",
        "cache_path",
        type=click.Path(dir_okay=False, path_type=Path),
        envvar=CACHE_ENVVAR,
        default=None,
        help=f"JSON file caching computed series (default: ${CACHE_ENVVAR}, if set).",
    )(func)


def _backend_option(func: Callable[..., Any]) -> Callable[..., Any]:
    return click.option(
        "--backend",
        type=click.Choice([b.value for b in Backend]),
        default=Backend.dp.value,
        show_default=True,
        help="Evaluation method for the dimensions.",
    )(func)


@click.group(
    help=(
        "Dimensions of the graded pieces of the algebra of invariants of n-ary forms, "
        "and its Poincaré series."
    ),
)
@click.option(
    "--log-level",
    type=click.Choice(["ERROR", "WARNING", "INFO", "DEBUG"], case_sensitive=False),
    default="WARNING",
    show_default=True,
    help="Logging level of the messages written to standard error.",
)
@click.version_option(__version__, prog_name="nary-invariants")
def invariants(log_level: str) -> None:
    """
    Dimensions of the graded pieces of the algebra of invariants of n-ary forms.
    """

    logging.basicConfig(
        level=log_level.upper(),
        format="%(asctime)s %(name)s [%(levelname)s] %(message)s",
    )


@invariants.command(help="Print the dimension nu_{n,d}(k) of the invariants of degree k.")
@click.option("--n", "n", type=int, required=True, help="Number of variables of the forms.")
@click.option("--d", "d", type=int, required=True, help="Degree of the forms.")
@click.option("--k", "k", type=int, required=True, help="Degree of the invariants.")
@_format_option
@_backend_option
@_cache_option
@_limit_options
def dim(
    n: int,
    d: int,
    k: int,
    fmt: str,
    backend: str,
    cache_path: Optional[Path],
    limits: Limits,
) -> None:
    job = _job(
        command="dim",
        n=n,
        d=d,
        k=k,
        format=fmt,
        backend=backend,
        cache_path=cache_path,
        limits=limits,
    )
    job_d, job_k = cast(int, job.d), cast(int, job.k)
    with _handle_errors():
        value: Optional[int] = None
        if job.cache_path:
            with SeriesCache(job.cache_path).locked() as cache:
                cached = cache.lookup(job.n, job_d, job_k)
            if cached is not None:
                value = cached.coefficients[job_k]
        if value is None:
            value = nu(job.n, job_d, job_k, backend=job.backend, limits=job.limits)
    click.echo(render_dimension(job.n, job_d, job_k, value, job.format))


@invariants.command(help="Print the Poincaré series P_{n,d}(t) up to the term of degree K.")
@click.option("--n", "n", type=int, required=True, help="Number of variables of the forms.")
@click.option("--d", "d", type=int, required=True, help="Degree of the forms.")
@click.option("--K", "max_degree", type=int, required=True, help="Degree of the last term.")
@_format_option
@_backend_option
@click.option(
    "--workers",
    type=int,
    default=1,
    show_default=True,
    help="Number of worker processes computing coefficients in parallel.",
)
@_cache_option
@_limit_options
def series(
    n: int,
    d: int,
    max_degree: int,
    fmt: str,
    backend: str,
    workers: int,
    cache_path: Optional[Path],
    limits: Limits,
) -> None:
    job = _job(
        command="series",
        n=n,
        d=d,
        max_degree=max_degree,
        format=fmt,
        backend=backend,
        workers=workers,
        cache_path=cache_path,
        limits=limits,
    )
    with _handle_errors():
        if job.cache_path:
            with SeriesCache(job.cache_path).locked() as cache:
                result = cache.lookup(job.n, cast(int, job.d), cast(int, job.max_degree))
                if result is None:
                    result = _compute_series(job)
                    cache.store(result)
        else:
            result = _compute_series(job)
    click.echo(render_series(result, job.format))


def _compute_series(job: JobSpec) -> SeriesTruncation:
    return series_truncated(
        job.n,
        cast(int, job.d),
        cast(int, job.max_degree),
        backend=job.backend,
        limits=job.limits,
        workers=job.workers,
    )


@invariants.command(
    help="Print the shifted Weyl orbit of rho, aggregated into signed dominant weights.",
)
@click.option("--n", "n", type=int, required=True, help="Number of variables of the forms.")
@_format_option
@_limit_options
def orbit(n: int, fmt: str, limits: Limits) -> None:
    job = _job(command="orbit", n=n, format=fmt, limits=limits)
    with _handle_errors():
        terms = aggregate_orbit(job.n, limits=job.limits)
    click.echo(render_orbit(job.n, terms, job.format))


@invariants.command(
    help=(
        "Cross-check every backend on the degrees 0..K.\n\n"
        "Compares the dynamic programming counts, the brute-force oracle, "
        "the constant term extraction and, for binary forms, the Sylvester-Cayley count."
    ),
)
@click.option("--n", "n", type=int, required=True, help="Number of variables of the forms.")
@click.option("--d", "d", type=int, required=True, help="Degree of the forms.")
@click.option("--K", "max_degree", type=int, required=True, help="Degree of the last term.")
@_format_option
@_limit_options
def check(n: int, d: int, max_degree: int, fmt: str, limits: Limits) -> None:
    job = _job(command="check", n=n, d=d, max_degree=max_degree, format=fmt, limits=limits)
    job_d, job_max_degree = cast(int, job.d), cast(int, job.max_degree)

    methods: Dict[str, Callable[[int], int]] = {
        "dp": functools.partial(nu, job.n, job_d, backend=Backend.dp, limits=job.limits),
        "bruteforce": functools.partial(
            nu,
            job.n,
            job_d,
            backend=Backend.bruteforce,
            limits=job.limits,
        ),
        "residue": functools.partial(nu_constant_term, job.n, job_d, limits=job.limits),
    }
    if job.n == 2:  # noqa: PLR2004
        methods["sylvester_cayley"] = functools.partial(sylvester_cayley_binary, job_d)

    rows: List[CheckRow] = []
    incomplete: Optional[str] = None
    with _handle_errors():
        try:
            for k in range(job_max_degree + 1):
                values = {name: _evaluate(method, k) for name, method in methods.items()}
                rows.append(CheckRow(k=k, values=values))
        except ResourceLimitError as err:
            incomplete = str(err)
    report = CheckReport(
        n=job.n,
        d=job_d,
        max_degree=job_max_degree,
        rows=rows,
        incomplete=incomplete,
    )
    click.echo(render_check(report, job.format))
    if not report.passed:
        click.get_current_context().exit(EXIT_CHECK_MISMATCH)
    if incomplete:
        raise ResourceLimitExceeded(incomplete)


def _evaluate(method: Callable[[int], int], k: int) -> str:
    try:
        return str(method(k))
    except NegativeDimensionError as err:
        return f"negative({err.value})"
