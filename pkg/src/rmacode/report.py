"""Text, JSON and CSV rendering of deception reports, and parameter sweeps."""

from __future__ import annotations

import json

from .auth import AuthConfig
from .deception import (
    DeceptionReport,
    dec4,
    p_deception_from_definitions,
    p_substitution_bruteforce,
    p_substitution_closed_form,
)
from .errors import NoWitnessError

METHODS = {
    "closed": p_substitution_closed_form,
    "brute": p_substitution_bruteforce,
    "definition": p_deception_from_definitions,
}

HEADER = ("m", "r", "M", "l", "P_I(exact)", "P_I(dec4)", "P_S(exact)", "P_S(dec4)", "w", "wt", "method")

# Published substitution probabilities for r=1, M=4, l=3, keyed by m.
REFERENCE_PS = {4: "0.4", 5: "0.3817", 6: "0.3810", 7: "0.3780", 8: "0.3765"}


def reference_note(report: DeceptionReport) -> str | None:
    """Flag a disagreement with the published table, if the row has a published value."""
    if (report.r, report.M, report.l) != (1, 4, 3) or report.m not in REFERENCE_PS:
        return None
    printed = REFERENCE_PS[report.m]
    if float(printed) == float(dec4(report.p_s)):
        return None
    return (
        f"m={report.m}: computed P_S={dec4(report.p_s)} ({report.p_s.numerator}/"
        f"{report.p_s.denominator}); published table prints {printed}, "
        "a suspected digit transposition"
    )


def analyze(config: AuthConfig, method: str = "all") -> tuple[list[DeceptionReport], list[str]]:
    names = list(METHODS) if method == "all" else [method]
    reports, notes = [], []
    for name in names:
        try:
            reports.append(METHODS[name](config))
        except NoWitnessError as exc:
            if method != "all":
                raise
            notes.append(f"closed form skipped: {exc}")
    return reports, notes


def sweep(ms, r: int, M: int, l: int, method: str = "closed"):
    reports, notes = [], []
    for m in ms:
        rs, ns = analyze(AuthConfig.create(m, r, M, l), method)
        reports += rs
        notes += ns
    return reports, notes


def render(reports: list[DeceptionReport], notes: list[str], fmt: str = "text") -> str:
    notes = notes + [n for n in map(reference_note, reports) if n and n not in notes]
    if fmt == "json":
        return json.dumps({"reports": [r.to_dict() for r in reports], "notes": notes}, indent=2) + "\n"
    if fmt == "csv":
        lines = [",".join(HEADER)]
        lines += [",".join(str(v) for v in r.to_dict().values()) for r in reports]
        return "\n".join(lines) + "\n"
    rows = [list(HEADER)] + [[str(v) for v in r.to_dict().values()] for r in reports]
    widths = [max(len(row[i]) for row in rows) for i in range(len(HEADER))]
    out = ["  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in rows]
    out += [f"* {n}" for n in notes]
    return "\n".join(out) + "\n"
