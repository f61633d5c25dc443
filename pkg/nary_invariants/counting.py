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
Counting non-negative integer solutions of the weight system of a graded piece.

A solution is a multiset `alpha` of `k` monomials of an n-ary form of degree `d`
(a function from the monomial index set to the non-negative integers) whose exponent
sums `omega_s(alpha)` hit a prescribed target vector. Equivalently, the count is
a coefficient of the generating function `1 / prod(1 - t q^eta)` taken over all
monomial exponents `eta`.
"""

from __future__ import annotations

import functools
import math

from fractions import Fraction
from logging import getLogger
from typing import TYPE_CHECKING, List, Tuple, Union

from .config import DEFAULT_LIMITS
from .exceptions import InvalidParameterError, InvalidRankError, ResourceLimitError
from .types import Backend, ExponentIndex, Infeasible, TargetVector, Weight
from .weyl import mu_prime

if TYPE_CHECKING:
    from typing import Optional

    from .config import Limits

logger = getLogger(__name__)


def check_parameters(n: int, d: int, k: Optional[int] = None) -> None:
    """
    Validate the rank, degree and (if given) invariant degree of a query.

    Raises:
        InvalidRankError: If `n < 2`.
        InvalidParameterError: If `d < 1` or `k < 0`.
    """

    if n < 2:  # noqa: PLR2004
        raise InvalidRankError(n)
    if d < 1:
        raise InvalidParameterError(
            f"Invalid degree d={d}: the forms must have degree at least 1",
        )
    if k is not None and k < 0:
        raise InvalidParameterError(f"Invalid invariant degree k={k}: must be non-negative")


def index_set(n: int, d: int) -> List[ExponentIndex]:
    """
    Return the exponent vectors `i` of all monomials `x^i` with `|i| <= d` in `n - 1` variables.

    Monomials are ordered by degree, and descending lexicographically within a degree:
    `(0,0), (1,0), (0,1), (2,0), (1,1), (0,2), ...`

    Args:
        n (int): Number of variables of the forms.
        d (int): Degree of the forms.

    Raises:
        InvalidRankError: If `n < 2`.
        InvalidParameterError: If `d < 1`.

    Returns:
        List of `C(d + n - 1, n - 1)` exponent indices
    """

    check_parameters(n, d)
    return [ExponentIndex(exponents=exponents) for exponents in _monomials(n, d)]


@functools.lru_cache(maxsize=None)
def _monomials(n: int, d: int) -> Tuple[Tuple[int, ...], ...]:
    return tuple(
        exponents for degree in range(d + 1) for exponents in _compositions(degree, n - 1)
    )


def _compositions(total: int, parts: int) -> List[Tuple[int, ...]]:
    # Weak compositions of `total`, descending lexicographically.
    if parts == 1:
        return [(total,)]
    return [
        (first, *rest)
        for first in range(total, -1, -1)
        for rest in _compositions(total - first, parts - 1)
    ]


def targets(n: int, d: int, k: int, mu: Weight) -> Union[TargetVector, Infeasible]:
    """
    Solve the weight system for the required values of `omega_1(alpha), ..., omega_{n-1}(alpha)`.

    The targets are `k * d / n - mu'_i`, computed in exact rational arithmetic.

    Args:
        n (int): Number of variables of the forms.
        d (int): Degree of the forms.
        k (int): Degree of the invariants, which is the cardinality `|alpha|`.
        mu (Weight): Dominant weight of the term being counted.

    Returns:
        Target vector, or `Infeasible` if any target is negative or non-integral
    """

    check_parameters(n, d, k)
    base = Fraction(k * d, n)
    values = [base - offset for offset in mu_prime(n, mu).coords]
    for value in values:
        if value.denominator != 1:
            return Infeasible(reason=f"target {value} is not an integer")
        if value < 0:
            return Infeasible(reason=f"target {value} is negative")
    return TargetVector(targets=tuple(int(value) for value in values), cardinality=k)


def _check_target_length(n: int, tv: TargetVector) -> None:
    if len(tv.targets) != n - 1:
        raise InvalidParameterError(
            f"Target vector has {len(tv.targets)} entries, expected {n - 1} for n={n}",
        )


def count_solutions_bruteforce(
    n: int,
    d: int,
    tv: TargetVector,
    limits: Optional[Limits] = None,
) -> int:
    """
    Count the solutions by exhaustive enumeration of multiplicities, monomial by monomial.

    Branches are pruned when the remaining budget of monomials cannot cover the
    remaining targets, even using the largest exponent still available in every
    coordinate.

    Args:
        n (int): Number of variables of the forms.
        d (int): Degree of the forms.
        tv (TargetVector): Targets and cardinality of the solutions.
        limits (Optional[Limits], optional): Resource limits. Defaults to `DEFAULT_LIMITS`.

    Raises:
        ResourceLimitError: If the number of multisets of size `k` over the index set
            exceeds the configured maximum number of oracle nodes.

    Returns:
        Number of solutions
    """

    check_parameters(n, d)
    _check_target_length(n, tv)
    limits = limits or DEFAULT_LIMITS
    monomials = _monomials(n, d)
    k = tv.cardinality
    search_space = math.comb(len(monomials) + k - 1, k)
    if search_space > limits.max_oracle_nodes:
        raise ResourceLimitError(
            "max_oracle_nodes",
            requested=search_space,
            allowed=limits.max_oracle_nodes,
        )

    # suffix_max[p][s] is the largest exponent in coordinate s among monomials p, p+1, ...
    suffix_max = [[0] * (n - 1) for _ in range(len(monomials) + 1)]
    for p in range(len(monomials) - 1, -1, -1):
        suffix_max[p] = [max(a, b) for a, b in zip(suffix_max[p + 1], monomials[p])]

    def _search(p: int, budget: int, remaining: Tuple[int, ...]) -> int:
        if budget == 0:
            return 0 if any(remaining) else 1
        if p == len(monomials):
            return 0
        if any(r > budget * m for r, m in zip(remaining, suffix_max[p])):
            return 0
        eta = monomials[p]
        total = 0
        current = remaining
        for _ in range(budget + 1):
            total += _search(p + 1, budget, current)
            budget -= 1
            current = tuple(r - e for r, e in zip(current, eta))
            if budget < 0 or any(r < 0 for r in current):
                break
        return total

    count = _search(0, k, tv.targets)
    logger.debug("bruteforce n=%i d=%i %s -> %i", n, d, repr(tv), count)
    return count


def count_solutions_dp(
    n: int,
    d: int,
    tv: TargetVector,
    limits: Optional[Limits] = None,
) -> int:
    """
    Count the solutions as a coefficient of the truncated generating function.

    The product `1 / prod(1 - t q^eta)` is expanded one monomial at a time, keeping
    only the coefficients of `t^j q^w` with `j <= k` and `w` inside the box bounded
    by the targets. Only counts that can still contribute are ever stored.

    Args:
        n (int): Number of variables of the forms.
        d (int): Degree of the forms.
        tv (TargetVector): Targets and cardinality of the solutions.
        limits (Optional[Limits], optional): Resource limits. Defaults to `DEFAULT_LIMITS`.

    Raises:
        ResourceLimitError: If the table would exceed the configured maximum number of cells.

    Returns:
        Number of solutions
    """

    check_parameters(n, d)
    _check_target_length(n, tv)
    limits = limits or DEFAULT_LIMITS
    cells = (tv.cardinality + 1) * math.prod(t + 1 for t in tv.targets)
    if cells > limits.max_dp_cells:
        raise ResourceLimitError("max_dp_cells", requested=cells, allowed=limits.max_dp_cells)
    return _count_dp(n, d, tv.cardinality, tv.targets)


@functools.lru_cache(maxsize=4096)
def _count_dp(n: int, d: int, k: int, box: Tuple[int, ...]) -> int:
    # Offsets are row-major in the box of dimensions (box[s] + 1).
    sizes = [b + 1 for b in box]
    strides = [math.prod(sizes[s + 1 :]) for s in range(len(sizes))]
    volume = math.prod(sizes)
    points = [
        tuple((offset // stride) % size for stride, size in zip(strides, sizes))
        for offset in range(volume)
    ]
    table = [[0] * volume for _ in range(k + 1)]
    table[0][0] = 1
    for eta in _monomials(n, d):
        if any(e > b for e, b in zip(eta, box)):
            continue
        shift = sum(e * stride for e, stride in zip(eta, strides))
        sources = [
            offset
            for offset, point in enumerate(points)
            if all(x + e <= b for x, e, b in zip(point, eta, box))
        ]
        # Ascending in j, so eta may be used any number of times.
        for j in range(k):
            src = table[j]
            dst = table[j + 1]
            for offset in sources:
                value = src[offset]
                if value:
                    dst[offset + shift] += value
    count = table[k][volume - 1]
    logger.debug("dp n=%i d=%i k=%i targets=%s cells=%i -> %i", n, d, k, box, volume, count)
    return count


def c(
    n: int,
    d: int,
    k: int,
    mu: Weight,
    backend: Backend = Backend.dp,
    limits: Optional[Limits] = None,
) -> int:
    """
    Return `c_{n,d}(k, mu)`, the number of non-negative integer solutions of the weight system.

    Args:
        n (int): Number of variables of the forms.
        d (int): Degree of the forms.
        k (int): Degree of the invariants.
        mu (Weight): Dominant weight of the term.
        backend (Backend, optional): Counting backend. Defaults to `Backend.dp`.
        limits (Optional[Limits], optional): Resource limits. Defaults to `DEFAULT_LIMITS`.

    Raises:
        InvalidParameterError: If the residue backend is requested, which works on
            whole orbit sums rather than single counts.

    Returns:
        Number of solutions, zero if the targets are infeasible
    """

    tv = targets(n, d, k, mu)
    if isinstance(tv, Infeasible):
        logger.debug("c n=%i d=%i k=%i mu=%s infeasible: %s", n, d, k, mu, tv.reason)
        return 0
    if backend == Backend.dp:
        return count_solutions_dp(n, d, tv, limits=limits)
    if backend == Backend.bruteforce:
        return count_solutions_bruteforce(n, d, tv, limits=limits)
    raise InvalidParameterError(f"Backend '{backend.value}' does not count single terms")
