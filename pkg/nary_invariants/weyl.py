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
Weight combinatorics for the root system `A_{n-1}` of `sl_n`.

Weights are stored in fundamental-weight coordinates. The Weyl group is realised
as the symmetric group `S_n` permuting the entries of the L-vector of a weight,
so reflections never have to be implemented separately.
"""

from __future__ import annotations

import functools
import itertools

from collections import Counter
from fractions import Fraction
from logging import getLogger
from typing import TYPE_CHECKING, List, Sequence, Tuple

from .config import DEFAULT_LIMITS
from .exceptions import InvalidParameterError, InvalidRankError, ResourceLimitError
from .types import LVector, RationalWeight, SignedDominantTerm, SignedWeight, Weight

if TYPE_CHECKING:
    from typing import Optional

    from .config import Limits

logger = getLogger(__name__)


def _check_rank(n: int) -> None:
    if n < 2:  # noqa: PLR2004
        raise InvalidRankError(n)


def _check_rank_limit(n: int, limits: Optional[Limits]) -> None:
    _check_rank(n)
    limits = limits or DEFAULT_LIMITS
    if n > limits.max_rank:
        raise ResourceLimitError("max_rank", requested=n, allowed=limits.max_rank)


def rho(n: int) -> Weight:
    """
    Return the half-sum of the positive roots of `sl_n`.

    Args:
        n (int): Number of variables of the forms.

    Returns:
        The weight `(1, 1, ..., 1)` with `n - 1` coordinates
    """

    _check_rank(n)
    return Weight(coords=(1,) * (n - 1))


def weight_to_lvector(w: Weight) -> LVector:
    """
    Write a weight on the `L_1, ..., L_n` basis, normalised so that the last entry is zero.

    Args:
        w (Weight): Weight in fundamental-weight coordinates.

    Returns:
        L-vector whose successive differences are the coordinates of `w`
    """

    entries = [0]
    for coord in reversed(w.coords):
        entries.append(entries[-1] + coord)
    return LVector(entries=tuple(reversed(entries)))


def lvector_to_weight(v: LVector) -> Weight:
    """
    Inverse of `weight_to_lvector`, up to the constant shift ignored by weights.
    """

    return Weight(coords=_differences(v.entries))


def _differences(entries: Sequence[int]) -> Tuple[int, ...]:
    return tuple(a - b for a, b in zip(entries, entries[1:]))


def _parity(permutation: Sequence[int]) -> int:
    inversions = sum(
        1
        for i, j in itertools.combinations(range(len(permutation)), 2)
        if permutation[i] > permutation[j]
    )
    return -1 if inversions % 2 else 1


def signed_orbit_rho(n: int, limits: Optional[Limits] = None) -> List[SignedWeight]:
    """
    Enumerate the shifted Weyl orbit `rho - s(rho)` together with the signs `(-1)^|s|`.

    One element is produced per permutation of `S_n`, in `itertools.permutations` order.

    Args:
        n (int): Number of variables of the forms.
        limits (Optional[Limits], optional): Resource limits. Defaults to `DEFAULT_LIMITS`.

    Raises:
        InvalidRankError: If `n < 2`.
        ResourceLimitError: If `n` is larger than the configured maximum rank.

    Returns:
        List of `n!` signed weights
    """

    _check_rank_limit(n, limits)
    return _signed_orbit(n)


def _signed_orbit(n: int) -> List[SignedWeight]:
    rho_entries = weight_to_lvector(rho(n)).entries
    orbit = []
    for permutation in itertools.permutations(range(n)):
        shifted = tuple(rho_entries[i] - rho_entries[j] for i, j in enumerate(permutation))
        orbit.append(
            SignedWeight(weight=Weight(coords=_differences(shifted)), sign=_parity(permutation)),
        )
    return orbit


def dominant_representative(w: Weight) -> Weight:
    """
    Return the unique dominant weight on the Weyl orbit of `w`.

    Sorting the L-vector in descending order is equivalent to applying simple
    reflections until every coordinate is non-negative.
    """

    return Weight(coords=_differences(sorted(weight_to_lvector(w).entries, reverse=True)))


def aggregate_orbit(n: int, limits: Optional[Limits] = None) -> List[SignedDominantTerm]:
    """
    Group the shifted orbit of `rho` by dominant representative, summing the signs.

    Terms whose signs cancel are dropped, and the rest are sorted lexicographically
    by dominant weight. The result is cached per `n`.

    Args:
        n (int): Number of variables of the forms.
        limits (Optional[Limits], optional): Resource limits. Defaults to `DEFAULT_LIMITS`.

    Returns:
        Signed dominant terms of the alternating sum over the Weyl group
    """

    _check_rank_limit(n, limits)
    return list(_aggregate_orbit(n))


@functools.lru_cache(maxsize=None)
def _aggregate_orbit(n: int) -> Tuple[SignedDominantTerm, ...]:
    multiplicities: Counter[Weight] = Counter()
    orbit = _signed_orbit(n)
    for element in orbit:
        multiplicities[dominant_representative(element.weight)] += element.sign
    terms = tuple(
        SignedDominantTerm(dominant=dominant, multiplicity=multiplicity)
        for dominant, multiplicity in sorted(
            multiplicities.items(),
            key=lambda item: item[0].coords,
        )
        if multiplicity
    )
    logger.info(
        "Aggregated the Weyl orbit of rho for n=%i: %i elements into %i dominant terms",
        n,
        len(orbit),
        len(terms),
    )
    return terms


def mu_prime(n: int, mu: Weight) -> RationalWeight:
    """
    Translate a weight into the rational exponent offsets used for coefficient extraction.

    For `i = 1, ..., n - 1` the entry is
    `sum(mu_s for s in i..n-2) - (sum(s * mu_s for s in 1..n-2) - mu_(n-1)) / n`.

    Args:
        n (int): Number of variables of the forms.
        mu (Weight): Weight with `n - 1` coordinates.

    Raises:
        InvalidParameterError: If `mu` does not have `n - 1` coordinates.

    Returns:
        Exact rational vector `mu'`
    """

    _check_rank(n)
    if len(mu.coords) != n - 1:
        raise InvalidParameterError(
            f"Weight {mu} has {len(mu.coords)} coordinates, expected {n - 1} for n={n}",
        )
    # mu.coords[s - 1] holds mu_s.
    head = mu.coords[:-1]
    correction = Fraction(
        sum(s * mu_s for s, mu_s in enumerate(head, 1)) - mu.coords[-1],
        n,
    )
    return RationalWeight(
        coords=tuple(sum(head[i:]) - correction for i in range(n - 1)),
    )


def mu_prime_scaled(n: int, mu: Weight) -> Tuple[int, ...]:
    """
    Return the integral vector `n * mu'`.
    """

    return mu_prime(n, mu).scaled()
