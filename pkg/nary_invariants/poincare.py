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
Dimensions of the graded pieces of the invariant algebra, and its Poincaré series.

The dimension `nu_{n,d}(k)` is the alternating sum, over the Weyl group `W` of `sl_n`,
of the counts `c_{n,d}(k, {rho - s(rho)})`. The Poincaré series is the constant term
in `q` of

```
sum((-1)^|s| q^(n {rho - s(rho)}')) / prod(1 - t q^(n eta - d rho))
```

which is what the contour integral around the unit torus extracts. All arithmetic
is exact; there is no numerical integration anywhere.
"""

from __future__ import annotations

import functools
import multiprocessing

from concurrent.futures import ProcessPoolExecutor
from logging import getLogger
from typing import TYPE_CHECKING, Dict, List, Tuple

from .config import DEFAULT_LIMITS
from .counting import c, check_parameters, index_set
from .exceptions import InvalidParameterError, NegativeDimensionError, ResourceLimitError
from .types import Backend, SeriesTruncation
from .weyl import aggregate_orbit, mu_prime_scaled

if TYPE_CHECKING:
    from typing import Optional

    from .config import Limits

logger = getLogger(__name__)


def nu(
    n: int,
    d: int,
    k: int,
    backend: Backend = Backend.dp,
    limits: Optional[Limits] = None,
) -> int:
    """
    Return `nu_{n,d}(k)`, the dimension of the space of invariants of degree `k`
    of n-ary forms of degree `d`.

    Degree 0 always has dimension 1, and degrees with `k * d` not divisible by `n`
    have dimension 0; both are answered without touching the Weyl orbit.

    Args:
        n (int): Number of variables of the forms.
        d (int): Degree of the forms.
        k (int): Degree of the invariants.
        backend (Backend, optional): Evaluation method. Defaults to `Backend.dp`.
        limits (Optional[Limits], optional): Resource limits. Defaults to `DEFAULT_LIMITS`.

    Raises:
        NegativeDimensionError: If the alternating sum is negative.

    Returns:
        Dimension of the graded piece of degree `k`
    """

    check_parameters(n, d, k)
    if k == 0:
        return 1
    if (k * d) % n:
        return 0
    if backend == Backend.residue:
        value = nu_constant_term(n, d, k, limits=limits)
    else:
        value = sum(
            term.multiplicity * c(n, d, k, term.dominant, backend=backend, limits=limits)
            for term in aggregate_orbit(n, limits=limits)
        )
    if value < 0:
        raise NegativeDimensionError(n, d, k, value)
    logger.debug("nu(%i,%i,%i) [%s] = %i", n, d, k, backend.value, value)
    return value


def series_truncated(
    n: int,
    d: int,
    max_degree: int,
    backend: Backend = Backend.dp,
    limits: Optional[Limits] = None,
    workers: int = 1,
) -> SeriesTruncation:
    """
    Return the Poincaré series `P_{n,d}(t)` up to and including the term of degree `max_degree`.

    Args:
        n (int): Number of variables of the forms.
        d (int): Degree of the forms.
        max_degree (int): Degree of the last coefficient to compute.
        backend (Backend, optional): Evaluation method. Defaults to `Backend.dp`.
        limits (Optional[Limits], optional): Resource limits. Defaults to `DEFAULT_LIMITS`.
        workers (int, optional): Number of worker processes. The coefficients are
            independent, and are always gathered in degree order. Defaults to 1.

    Returns:
        Truncated series
    """

    check_parameters(n, d, max_degree)
    if workers < 1:
        raise InvalidParameterError(f"Invalid number of workers: {workers}")
    compute = functools.partial(nu, n, d, backend=backend, limits=limits)
    degrees = range(max_degree + 1)
    if workers > 1 and max_degree > 0:
        logger.debug("Computing %i coefficients with %i workers", max_degree + 1, workers)
        with ProcessPoolExecutor(
            max_workers=workers,
            mp_context=multiprocessing.get_context("spawn"),
        ) as executor:
            coefficients = list(executor.map(compute, degrees))
    else:
        coefficients = [compute(k) for k in degrees]
    return SeriesTruncation(
        n=n,
        d=d,
        max_degree=max_degree,
        coefficients=tuple(coefficients),
    )


def integrand_numerator(
    n: int,
    limits: Optional[Limits] = None,
) -> List[Tuple[Tuple[int, ...], int]]:
    """
    Return the numerator `sum((-1)^|s| q^(n {rho - s(rho)}'))` of the Poincaré integrand.

    For `n = 3`, in the variables `(p, q)`, this is `1 + p^3 q^3 + p^6 q^-3 - 2 p^3 - p^6`.

    Returns:
        `(exponent vector, coefficient)` pairs, sorted by exponent vector
    """

    return sorted(
        (mu_prime_scaled(n, term.dominant), term.multiplicity)
        for term in aggregate_orbit(n, limits=limits)
    )


def integrand_denominator(n: int, d: int) -> List[Tuple[int, ...]]:
    """
    Return the exponent vectors `n * eta - d * rho` of the factors `1 - t q^(n eta - d rho)`
    of the Poincaré integrand, one per monomial exponent `eta`, in index set order.
    """

    return [tuple(n * e - d for e in eta.exponents) for eta in index_set(n, d)]


def nu_constant_term(n: int, d: int, k: int, limits: Optional[Limits] = None) -> int:
    """
    Compute `nu_{n,d}(k)` directly as the coefficient of `t^k` in the constant term (in `q`)
    of the Poincaré integrand.

    The product `1 / prod(1 - t q^v)` is expanded factor by factor into one dictionary
    of Laurent exponents per power of `t`. States that can no longer reach the exponent
    cancelling some numerator term within the remaining powers of `t` are discarded.

    Args:
        n (int): Number of variables of the forms.
        d (int): Degree of the forms.
        k (int): Degree of the invariants.
        limits (Optional[Limits], optional): Resource limits. Defaults to `DEFAULT_LIMITS`.

    Raises:
        ResourceLimitError: If the number of stored states exceeds the configured
            maximum number of table cells.

    Returns:
        Dimension of the graded piece of degree `k`
    """

    check_parameters(n, d, k)
    limits = limits or DEFAULT_LIMITS
    # Constant term of q^a * (...) is the coefficient of q^-a in (...).
    wanted = {
        tuple(-a for a in exponents): coefficient
        for exponents, coefficient in integrand_numerator(n, limits=limits)
    }
    steps = integrand_denominator(n, d)
    dims = range(n - 1)
    step_min = [min(step[s] for step in steps) for s in dims]
    step_max = [max(step[s] for step in steps) for s in dims]
    goal_min = [min(goal[s] for goal in wanted) for s in dims]
    goal_max = [max(goal[s] for goal in wanted) for s in dims]

    def _reachable(power: int, exponents: Tuple[int, ...]) -> bool:
        remaining = k - power
        return all(
            goal_min[s] - remaining * step_max[s]
            <= exponents[s]
            <= goal_max[s] - remaining * step_min[s]
            for s in dims
        )

    layers: List[Dict[Tuple[int, ...], int]] = [{} for _ in range(k + 1)]
    layers[0][(0,) * (n - 1)] = 1
    stored = 1
    for step in steps:
        # Ascending in the power of t, so each factor may be used any number of times.
        for power in range(k):
            target_layer = layers[power + 1]
            for exponents, count in layers[power].items():
                shifted = tuple(e + v for e, v in zip(exponents, step))
                if not _reachable(power + 1, shifted):
                    continue
                if shifted not in target_layer:
                    stored += 1
                    if stored > limits.max_dp_cells:
                        raise ResourceLimitError(
                            "max_dp_cells",
                            requested=stored,
                            allowed=limits.max_dp_cells,
                        )
                    target_layer[shifted] = 0
                target_layer[shifted] += count
    top = layers[k]
    value = sum(coefficient * top.get(goal, 0) for goal, coefficient in wanted.items())
    logger.debug("constant term nu(%i,%i,%i) states=%i -> %i", n, d, k, stored, value)
    return value


def sylvester_cayley_binary(d: int, k: int) -> int:
    """
    Return `nu_{2,d}(k)` by the classical Sylvester-Cayley count, without any Weyl group
    machinery.

    The dimension is the number of partitions of `d * k / 2` into at most `k` parts of
    size at most `d`, minus the number of partitions of `d * k / 2 - 1` of the same shape.

    Args:
        d (int): Degree of the binary forms.
        k (int): Degree of the invariants.

    Returns:
        Dimension of the space of invariants of degree `k` of a binary form of degree `d`
    """

    check_parameters(2, d, k)
    if (d * k) % 2:
        return 0
    weight = d * k // 2
    return _partitions_in_box(weight, k, d) - _partitions_in_box(weight - 1, k, d)


@functools.lru_cache(maxsize=None)
def _partitions_in_box(total: int, parts: int, largest: int) -> int:
    # Partitions of `total` into at most `parts` parts, each at most `largest`.
    if total < 0:
        return 0
    if total == 0:
        return 1
    if parts == 0 or largest == 0:
        return 0
    return _partitions_in_box(total, parts, largest - 1) + _partitions_in_box(
        total - largest,
        parts - 1,
        largest,
    )
