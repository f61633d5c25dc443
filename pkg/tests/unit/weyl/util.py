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
Weight combinatorics unit test constants.
"""

from __future__ import annotations

from fractions import Fraction

# Shifted orbit rho - s(rho) with signs, as a set of (coords, sign) pairs.
SIGNED_ORBIT = {
    2: {((0,), 1), ((2,), -1)},
    3: {
        ((0, 0), 1),
        ((2, -1), -1),
        ((-1, 2), -1),
        ((2, 2), -1),
        ((0, 3), 1),
        ((3, 0), 1),
    },
}

# Aggregated terms, in lexicographic order of the dominant weight.
AGGREGATED_ORBIT = {
    2: [((0,), 1), ((2,), -1)],
    3: [((0, 0), 1), ((0, 3), 1), ((1, 1), -2), ((2, 2), -1), ((3, 0), 1)],
}

MU_PRIME_TERNARY = {
    (0, 0): (Fraction(0), Fraction(0)),
    (1, 1): (Fraction(1), Fraction(0)),
    (2, 2): (Fraction(2), Fraction(0)),
    (0, 3): (Fraction(1), Fraction(1)),
    (3, 0): (Fraction(2), Fraction(-1)),
}
