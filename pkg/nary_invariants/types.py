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
Domain value types.

All models are frozen, so values are hashable and can be shared freely
between threads and worker processes.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Literal, Tuple

from pydantic import (
    BaseModel,
    ConfigDict,
    NonNegativeInt,
    StrictInt,
    field_validator,
    model_validator,
)
from typing_extensions import Self


class Backend(str, Enum):
    """
    Method used to evaluate the dimensions of the graded pieces.
    """

    dp = "dp"
    bruteforce = "bruteforce"
    residue = "residue"


class OutputFormat(str, Enum):
    """
    Output rendering format of the command line interface.
    """

    plain = "plain"
    latex = "latex"
    json = "json"


class InvariantsModel(BaseModel):
    """
    Base class for immutable domain values.
    """

    model_config = ConfigDict(frozen=True)


class Weight(InvariantsModel):
    """
    Weight of `sl_n` in fundamental-weight coordinates.

    The coordinate `coords[i]` is the coefficient of the fundamental weight `phi_(i+1)`,
    so a weight of `sl_n` has `n - 1` coordinates.
    """

    coords: Tuple[StrictInt, ...]

    @field_validator("coords")
    @classmethod
    def validate_coords(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        if not value:
            raise ValueError("a weight must have at least one coordinate")
        return value

    @classmethod
    def of(cls, *coords: int) -> Self:
        return cls(coords=coords)

    @property
    def rank(self) -> int:
        return len(self.coords) + 1

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def __str__(self) -> str:
        return f"({','.join(str(c) for c in self.coords)})"


class LVector(InvariantsModel):
    """
    Weight written on the basis `L_1, ..., L_n` of the dual Cartan subalgebra.

    Only the successive differences of the entries are meaningful: adding a constant
    to every entry describes the same weight.
    """

    entries: Tuple[StrictInt, ...]

    @field_validator("entries")
    @classmethod
    def validate_entries(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        if len(value) < 2:  # noqa: PLR2004
            raise ValueError("an L-vector must have at least two entries")
        return value

    @property
    def rank(self) -> int:
        return len(self.entries)


class SignedWeight(InvariantsModel):
    """
    Element `rho - s(rho)` of the shifted Weyl orbit, with the sign `(-1)^|s|`.
    """

    weight: Weight
    sign: Literal[1, -1]


class SignedDominantTerm(InvariantsModel):
    """
    Dominant weight together with the summed signs of all orbit elements mapping to it.
    """

    dominant: Weight
    multiplicity: StrictInt

    @field_validator("dominant")
    @classmethod
    def validate_dominant(cls, value: Weight) -> Weight:
        if not value.is_dominant():
            raise ValueError(f"weight {value} is not dominant")
        return value

    @field_validator("multiplicity")
    @classmethod
    def validate_multiplicity(cls, value: int) -> int:
        if value == 0:
            raise ValueError("multiplicity must be non-zero")
        return value


class RationalWeight(InvariantsModel):
    """
    Exact rational vector of length `n - 1` whose entries have denominators dividing `n`.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    coords: Tuple[Fraction, ...]

    @model_validator(mode="after")
    def validate_denominators(self) -> Self:
        if not self.coords:
            raise ValueError("a rational weight must have at least one coordinate")
        for value in self.coords:
            if (value * self.rank).denominator != 1:
                raise ValueError(f"entry {value} is not a multiple of 1/{self.rank}")
        return self

    @property
    def rank(self) -> int:
        return len(self.coords) + 1

    def scaled(self) -> Tuple[int, ...]:
        """
        Return `n` times this vector, which is always integral.
        """

        return tuple(int(value * self.rank) for value in self.coords)


class ExponentIndex(InvariantsModel):
    """
    Exponent vector `i` of a monomial of an n-ary form of degree `d`, with `|i| <= d`.
    """

    exponents: Tuple[NonNegativeInt, ...]

    @property
    def degree(self) -> int:
        return sum(self.exponents)


class TargetVector(InvariantsModel):
    """
    Right-hand side of the linear system counted by `c_{n,d}(k, mu)`.

    The values `omega_1(alpha), ..., omega_{n-1}(alpha)` must equal `targets`,
    and the solution must have `|alpha| == cardinality`.
    """

    targets: Tuple[NonNegativeInt, ...]
    cardinality: NonNegativeInt


class Infeasible(InvariantsModel):
    """
    Marker returned when the target vector is negative or non-integral.

    The count of solutions is zero by definition in that case.
    """

    reason: str


class SeriesTruncation(InvariantsModel):
    """
    Poincaré series `P_{n,d}(t)` truncated after the term of degree `max_degree`.
    """

    n: int
    d: int
    max_degree: NonNegativeInt
    coefficients: Tuple[NonNegativeInt, ...]

    @model_validator(mode="after")
    def validate_coefficients(self) -> Self:
        if len(self.coefficients) != self.max_degree + 1:
            raise ValueError(
                f"expected {self.max_degree + 1} coefficients, got {len(self.coefficients)}",
            )
        if self.coefficients[0] != 1:
            raise ValueError("the constant coefficient must be 1")
        for k, value in enumerate(self.coefficients):
            if value and (k * self.d) % self.n:
                raise ValueError(
                    f"coefficient of t^{k} must vanish, "
                    f"since {self.n} does not divide {k * self.d}",
                )
        return self
