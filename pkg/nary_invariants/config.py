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
Resource limits and command line job configuration.
"""

from __future__ import annotations

from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, PositiveInt, field_validator
from typing_extensions import Annotated

from .types import Backend, OutputFormat

DEFAULT_MAX_RANK = 8
"""
Largest number of variables `n` whose Weyl group (of order `n!`) is enumerated by default.
"""


class Limits(BaseModel):
    """
    Resource caps guarding the factorial and combinatorial parts of the computation.

    ```python
    from nary_invariants.config import Limits
    from nary_invariants.poincare import nu

    nu(9, 3, 3, limits=Limits(max_rank=9))
    ```
    """

    model_config = ConfigDict(frozen=True)

    max_rank: Annotated[int, Field(ge=2)] = DEFAULT_MAX_RANK
    """
    Largest `n` for which the signed Weyl orbit of `rho` is enumerated.

    The orbit has `n!` elements, so raising this limit quickly becomes expensive.
    """

    max_dp_cells: PositiveInt = 20_000_000
    """
    Largest number of cells in a dynamic programming table of the counting backend.

    A table for cardinality `k` and targets `w` holds `(k + 1) * prod(w[s] + 1)` integers.
    """

    max_oracle_nodes: PositiveInt = 5_000_000
    """
    Largest estimated search space of the brute-force counting oracle,
    measured as the number of multisets of size `k` over the monomial index set.
    """


DEFAULT_LIMITS = Limits()


class JobSpec(BaseModel):
    """
    Fully validated description of one command line invocation.
    """

    model_config = ConfigDict(frozen=True)

    command: Literal["dim", "series", "orbit", "check"]
    n: int
    d: Optional[Annotated[int, Field(ge=1)]] = None
    k: Optional[NonNegativeInt] = None
    max_degree: Optional[NonNegativeInt] = None
    format: OutputFormat = OutputFormat.plain
    backend: Backend = Backend.dp
    workers: PositiveInt = 1
    cache_path: Optional[Path] = None
    limits: Limits = DEFAULT_LIMITS

    @field_validator("n")
    @classmethod
    def validate_n(cls, value: int) -> int:
        if value < 2:  # noqa: PLR2004
            raise ValueError(f"invalid rank n={value}: the forms must have at least 2 variables")
        return value
