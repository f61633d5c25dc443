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
Poincaré series unit test constants.
"""

from __future__ import annotations

SERIES = {
    # Generated by the discriminant in degree 2.
    (2, 2, 6): (1, 0, 1, 0, 1, 0, 1),
    # Generated by the classical invariants of degrees 4 and 6.
    (3, 3, 12): (1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 2),
}

DIMENSIONS = [
    (2, 2, 2, 1),
    (2, 3, 2, 0),
    (2, 3, 1, 0),
    (2, 4, 2, 1),
    (2, 4, 3, 1),
    (3, 2, 1, 0),
    (3, 3, 4, 1),
    (3, 3, 3, 0),
]

# Exponent vectors n * mu' of the numerator of the ternary integrand.
TERNARY_NUMERATOR = [
    ((0, 0), 1),
    ((3, 0), -2),
    ((3, 3), 1),
    ((6, -3), 1),
    ((6, 0), -1),
]
