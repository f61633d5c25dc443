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
Unit test fixtures.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

import pytest

from click.testing import CliRunner

from nary_invariants.cli import CACHE_ENVVAR
from nary_invariants.config import Limits

if TYPE_CHECKING:
    from typing import Callable


@pytest.fixture
def runner(monkeypatch) -> CliRunner:
    """
    Fixture for invoking the command line interface in-process.

    The cache environment variable is always cleared, so that tests never pick up
    a cache file from the environment running them.

    Returns:
        CliRunner: The Click test runner.
    """

    monkeypatch.delenv(CACHE_ENVVAR, raising=False)
    return CliRunner()


@pytest.fixture
def limits_factory() -> Callable[..., Limits]:
    """
    A factory fixture for creating resource limits,
    with any unspecified limit left at its default value.

    Returns:
        Callable[..., Limits]: The factory function.
    """

    def _limits_factory(**kwargs) -> Limits:
        return Limits(**kwargs)

    return _limits_factory


@pytest.fixture
def tiny_limits(limits_factory) -> Limits:
    """
    Fixture for resource limits small enough to be exceeded by modest queries.

    Returns:
        Limits: The resource limits.
    """

    return limits_factory(max_rank=3, max_dp_cells=50, max_oracle_nodes=50)
