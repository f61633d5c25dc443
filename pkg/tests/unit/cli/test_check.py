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
Test the `check` command cross-checking the evaluation backends.
"""

from __future__ import annotations

import json

import pytest

from nary_invariants import counting
from nary_invariants.cli import invariants
from nary_invariants.render import CheckReport


@pytest.mark.parametrize(("n", "d", "max_degree"), [(2, 3, 8), (3, 2, 6), (2, 4, 6)])
def test_pass(runner, n, d, max_degree) -> None:
    """
    Check that every backend agrees on some small sweeps.
    """

    result = runner.invoke(
        invariants,
        ["check", "--n", str(n), "--d", str(d), "--K", str(max_degree)],
    )

    assert result.exit_code == 0, result.output
    lines = result.stdout.splitlines()
    assert len(lines) == max_degree + 2
    assert all(" PASS " in line for line in lines[:-1])
    assert lines[-1] == "PASS"


def test_binary_methods(runner) -> None:
    """
    Check that binary forms are also checked against the Sylvester-Cayley count.
    """

    result = runner.invoke(invariants, ["check", "--n", "2", "--d", "2", "--K", "2"])

    assert result.exit_code == 0, result.output
    assert result.stdout.splitlines()[2] == (
        "k=2 PASS dp=1 bruteforce=1 residue=1 sylvester_cayley=1"
    )


def test_ternary_methods(runner) -> None:
    """
    Check that the Sylvester-Cayley count is not used beyond binary forms.
    """

    result = runner.invoke(invariants, ["check", "--n", "3", "--d", "3", "--K", "4"])

    assert result.exit_code == 0, result.output
    assert result.stdout.splitlines()[4] == "k=4 PASS dp=1 bruteforce=1 residue=1"


def test_json(runner) -> None:
    """
    Check that the JSON report parses back into an identical report.
    """

    result = runner.invoke(
        invariants,
        ["check", "--n", "2", "--d", "2", "--K", "4", "--format", "json"],
    )

    assert result.exit_code == 0, result.output
    report = CheckReport.model_validate_json(result.stdout)
    assert report.passed
    assert [row.k for row in report.rows] == [0, 1, 2, 3, 4]
    assert json.loads(report.model_dump_json()) == json.loads(result.stdout)


def test_injected_fault(runner, mocker) -> None:
    """
    Check that a faulty counting backend is reported at the first degree it affects.
    """

    count_solutions_dp = counting.count_solutions_dp

    def _faulty(n, d, tv, limits=None):
        value = count_solutions_dp(n, d, tv, limits=limits)
        return value + 1 if tv.cardinality == 2 and tv.targets == (2,) else value  # noqa: PLR2004

    mocker.patch("nary_invariants.counting.count_solutions_dp", side_effect=_faulty)

    result = runner.invoke(invariants, ["check", "--n", "2", "--d", "2", "--K", "4"])

    assert result.exit_code == 4, result.output  # noqa: PLR2004
    lines = result.stdout.splitlines()
    assert lines[2] == "k=2 FAIL dp=2 bruteforce=1 residue=1 sylvester_cayley=1"
    assert lines[-1] == "FAIL: first mismatch at k=2"


def test_injected_fault_json(runner, mocker) -> None:
    """
    Check that the JSON report records the first mismatch.
    """

    mocker.patch("nary_invariants.counting.count_solutions_dp", return_value=0)

    result = runner.invoke(
        invariants,
        ["check", "--n", "2", "--d", "2", "--K", "4", "--format", "json"],
    )

    assert result.exit_code == 4, result.output  # noqa: PLR2004
    report = json.loads(result.stdout)
    assert report["passed"] is False
    assert report["first_mismatch"] == 2  # noqa: PLR2004


def test_incomplete(runner) -> None:
    """
    Check that a resource limit stops the sweep with a partial report.
    """

    result = runner.invoke(
        invariants,
        ["check", "--n", "3", "--d", "3", "--K", "6", "--max-oracle-nodes", "20"],
    )

    assert result.exit_code == 3, result.output  # noqa: PLR2004
    lines = result.stdout.splitlines()
    assert lines[:2] == [
        "k=0 PASS dp=1 bruteforce=1 residue=1",
        "k=1 PASS dp=0 bruteforce=0 residue=0",
    ]
    assert lines[2].startswith("INCOMPLETE: Resource limit 'max_oracle_nodes' exceeded")
