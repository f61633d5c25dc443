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
Plain text, LaTeX and JSON rendering of command results.

Integers that can grow without bound are always serialised to JSON as decimal strings.
"""

from __future__ import annotations

from typing import Dict, List, Literal, Optional, Sequence

from pydantic import BaseModel, computed_field

from .types import OutputFormat, SeriesTruncation, SignedDominantTerm

BRACE_THRESHOLD = 10
"""
Exponents from this value upwards are braced in plain text output (`t^{12}`, but `t^2`).
"""


class DimensionReport(BaseModel):
    """
    JSON output of `dim`, with the dimension written as a decimal string.
    """

    n: int
    d: int
    k: int
    nu: str


class SeriesReport(BaseModel):
    """
    JSON output of `series`, with the coefficients written as decimal strings.
    """

    n: int
    d: int
    max_degree: int
    coefficients: List[str]


class OrbitTermReport(BaseModel):
    """
    Dominant weight of the shifted orbit and its summed sign.
    """

    dominant: List[int]
    multiplicity: int


class OrbitReport(BaseModel):
    """
    JSON output of `orbit`.
    """

    n: int
    terms: List[OrbitTermReport]


class CheckRow(BaseModel):
    """
    Values of every backend for one degree of the sweep.
    """

    k: int
    values: Dict[str, str]

    @computed_field  # type: ignore[prop-decorator]
    @property
    def status(self) -> Literal["PASS", "FAIL"]:
        return "PASS" if len(set(self.values.values())) <= 1 else "FAIL"


class CheckReport(BaseModel):
    """
    Outcome of a cross-check sweep over the degrees `0..max_degree`.
    """

    n: int
    d: int
    max_degree: int
    rows: List[CheckRow]
    incomplete: Optional[str] = None
    """
    Reason the sweep stopped early, if it did.
    """

    @computed_field  # type: ignore[prop-decorator]
    @property
    def first_mismatch(self) -> Optional[int]:
        for row in self.rows:
            if row.status == "FAIL":
                return row.k
        return None

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return self.first_mismatch is None


def _power(k: int, braced: bool) -> str:
    if k == 1:
        return "t"
    if braced:
        return f"t^{{{k}}}"
    return f"t^{k}"


def _series_terms(coefficients: Sequence[int], latex: bool) -> List[str]:
    terms = []
    for k, coefficient in enumerate(coefficients):
        if not coefficient:
            continue
        if k == 0:
            terms.append(str(coefficient))
            continue
        power = _power(k, braced=latex or k >= BRACE_THRESHOLD)
        terms.append(power if coefficient == 1 else f"{coefficient} {power}")
    return terms


def render_dimension(n: int, d: int, k: int, value: int, fmt: OutputFormat) -> str:
    if fmt == OutputFormat.json:
        return DimensionReport(n=n, d=d, k=k, nu=str(value)).model_dump_json()
    if fmt == OutputFormat.latex:
        return f"\\nu_{{{n},{d}}}({k}) = {value}"
    return str(value)


def render_series(series: SeriesTruncation, fmt: OutputFormat) -> str:
    """
    Render a truncated Poincaré series.

    Plain text: `1 + t^2 + t^4 + 2 t^{12}`. LaTeX: `\\,1 + t^{2} + t^{4} + \\dots`.
    JSON: an object with the coefficients as decimal strings.
    """

    if fmt == OutputFormat.json:
        return SeriesReport(
            n=series.n,
            d=series.d,
            max_degree=series.max_degree,
            coefficients=[str(value) for value in series.coefficients],
        ).model_dump_json()
    if fmt == OutputFormat.latex:
        return "\\," + " + ".join([*_series_terms(series.coefficients, latex=True), "\\dots"])
    return " + ".join(_series_terms(series.coefficients, latex=False))


def render_orbit(n: int, terms: Sequence[SignedDominantTerm], fmt: OutputFormat) -> str:
    """
    Render the aggregated signed dominant terms of the shifted Weyl orbit of `rho`.

    Plain text: `(0,0):+1 (0,3):+1 (1,1):-2 (2,2):-1 (3,0):+1`. LaTeX: the alternating
    sum formula for `nu_{n,d}(k)` in terms of the counts `c_{n,d}(k, mu)`.
    """

    if fmt == OutputFormat.json:
        return OrbitReport(
            n=n,
            terms=[
                OrbitTermReport(
                    dominant=list(term.dominant.coords),
                    multiplicity=term.multiplicity,
                )
                for term in terms
            ],
        ).model_dump_json()
    if fmt == OutputFormat.latex:
        formula = ""
        for i, term in enumerate(terms):
            sign = "-" if term.multiplicity < 0 else "+"
            factor = abs(term.multiplicity)
            count = f"c_{{{n},d}}(k,{term.dominant})"
            if factor != 1:
                count = f"{factor}\\,{count}"
            if i == 0:
                formula += count if sign == "+" else f"-{count}"
            else:
                formula += f" {sign} {count}"
        return f"\\nu_{{{n},d}}(k) = {formula}"
    return " ".join(f"{term.dominant}:{term.multiplicity:+d}" for term in terms)


def render_check(report: CheckReport, fmt: OutputFormat) -> str:
    """
    Render a cross-check report, one line per degree followed by a summary line.
    """

    if fmt == OutputFormat.json:
        return report.model_dump_json()
    lines = [
        f"k={row.k} {row.status} "
        + " ".join(f"{name}={value}" for name, value in row.values.items())
        for row in report.rows
    ]
    if report.first_mismatch is not None:
        lines.append(f"FAIL: first mismatch at k={report.first_mismatch}")
    elif report.incomplete:
        lines.append(f"INCOMPLETE: {report.incomplete}")
    else:
        lines.append("PASS")
    return "\n".join(lines)
