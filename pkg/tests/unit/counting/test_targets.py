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
Test the solution of the weight system for the target vector.
"""

from __future__ import annotations

import pytest

from nary_invariants.counting import c, targets
from nary_invariants.types import Backend, Infeasible, TargetVector, Weight


def test_non_integral() -> None:
    """
    Check that a non-integral target makes the system infeasible.
    """

    result = targets(2, 3, 1, Weight.of(0))
    assert isinstance(result, Infeasible)
    assert "not an integer" in result.reason


def test_negative() -> None:
    """
    Check that a negative target makes the system infeasible.
    """

    result = targets(2, 2, 1, Weight.of(4))
    assert isinstance(result, Infeasible)
    assert "negative" in result.reason


@pytest.mark.parametrize(
    ("n", "d", "k", "mu", "expected"),
    [
        (2, 2, 2, (2,), (1,)),
        (2, 2, 2, (0,), (2,)),
        (3, 3, 1, (0, 0), (1, 1)),
        (3, 3, 2, (3, 0), (0, 3)),
    ],
)
def test_feasible(n, d, k, mu, expected) -> None:
    """
    Check the targets `k * d / n - mu'` of some feasible systems.
    """

    assert targets(n, d, k, Weight(coords=mu)) == TargetVector(targets=expected, cardinality=k)


@pytest.mark.parametrize(
    ("n", "d", "k", "mu"),
    [(2, 3, 1, (0,)), (2, 2, 1, (4,)), (3, 1, 1, (1, 1)), (3, 3, 0, (0, 3)), (3, 3, 1, (2, 2))],
)
@pytest.mark.parametrize("backend", [Backend.dp, Backend.bruteforce])
def test_infeasible_count_zero(n, d, k, mu, backend) -> None:
    """
    Check that infeasible systems have no solutions, whatever the backend.
    """

    assert isinstance(targets(n, d, k, Weight(coords=mu)), Infeasible)
    assert c(n, d, k, Weight(coords=mu), backend=backend) == 0


@pytest.mark.parametrize("mu", [(0, 0), (1, 1), (2, 2), (0, 3), (3, 0)])
def test_zero_degree(mu) -> None:
    """
    Check that for `k = 0` the count is 1 exactly when `mu'` vanishes.
    """

    expected = 1 if mu == (0, 0) else 0
    assert c(3, 3, 0, Weight(coords=mu)) == expected
