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
Exception classes.
"""

from __future__ import annotations


class InvariantsError(Exception):
    """
    Exception base class for all errors raised by this package.
    """

    pass


class InvalidParameterError(InvariantsError):
    """
    Error raised when a parameter lies outside the domain of an operation.
    """

    pass


class InvalidRankError(InvalidParameterError):
    """
    Error raised when the number of variables `n` of the forms is less than 2.
    """

    def __init__(self, n: int) -> None:
        self.n = n
        super().__init__(f"Invalid rank n={n}: the number of variables must be at least 2")


class ResourceLimitError(InvariantsError):
    """
    Error raised when a computation would exceed one of the configured resource limits.
    """

    def __init__(self, limit: str, requested: int, allowed: int) -> None:
        self.limit = limit
        self.requested = requested
        self.allowed = allowed
        super().__init__(
            f"Resource limit '{limit}' exceeded: requested {requested}, allowed {allowed}",
        )


class NegativeDimensionError(InvariantsError):
    """
    Error raised when the alternating orbit sum evaluates to a negative number.

    Dimensions of vector spaces are never negative, so this always signals a defect
    in one of the counting backends.
    """

    def __init__(self, n: int, d: int, k: int, value: int) -> None:
        self.value = value
        super().__init__(f"Computed a negative dimension nu({n},{d},{k}) = {value}")


class CacheError(InvariantsError):
    """
    Result cache exception base class.
    """

    pass


class CacheLockError(CacheError):
    """
    Error raised when the result cache is locked by another process.
    """

    pass
