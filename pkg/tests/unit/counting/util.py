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
Solution counting unit test constants.
"""

from __future__ import annotations

# (n, d, targets, k) -> number of solutions, enumerated by hand.
SOLUTION_COUNTS = [
    (2, 2, (2,), 2, 2),
    (2, 2, (1,), 2, 1),
    (3, 1, (1, 1), 2, 1),
    (2, 3, (0,), 0, 1),
    (3, 2, (0, 0), 0, 1),
    (2, 2, (5,), 2, 0),
]

ORACLE_GRID = [(n, d, k) for n in (2, 3) for d in (1, 2, 3, 4) for k in range(9)]
