"""Render command results as json, csv or markdown."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Any, List, Sequence

FORMATS = ("json", "csv", "markdown")


def _table(results: Any):
    """(header, rows) for the tabular formats."""
    kind = results.get("kind") if isinstance(results, dict) else None
    if kind == "corner_table":
        # one row per (r, s); several inner corners share a row
        header = ["r", "s", "inner", "direction", "st_candidates", "after_external"]
        grouped = {}
        for c in results["cases"]:
            grouped.setdefault((c["r"], c["s"]), []).append(c)
        rows = []
        for (r, s), cases in grouped.items():
            rows.append([r, s, "; ".join(_pt(c["inner"]) for c in cases),
                         "; ".join(_pt(c["direction"]) for c in cases),
                         "; ".join(" ".join(_pt(p) for p in c["st_candidates"]) for c in cases),
                         "; ".join(_after(c) for c in cases)])
        return header, rows, "no cases"
    if kind == "search_certificate":
        header = ["start_v11", "m", "n", "chain"]
        rows = []
        for ch in results["survivors"]:
            first = ch["nodes"][0]
            rows.append([_v11(first), ch["m"], ch["n"],
                         " -> ".join(_node(n) for n in ch["nodes"])])
        return header, rows, "no survivors"
    if kind == "verify":
        header = ["check", "status", "detail"]
        return header, [[c["name"], c["status"], c.get("detail", "")]
                        for c in results["checks"]], "no checks"
    if isinstance(results, dict):
        return ["key", "value"], [[k, _flat(v)] for k, v in results.items()], "empty"
    return ["value"], [[_flat(results)]], "empty"


def _after(case) -> str:
    left = case.get("after_external")
    if left is None:
        return "n/a"
    return " ".join(_pt(p) for p in left) or "none"


def _v11(node) -> str:
    return str(Fraction(node["A_xnum"], node["level"]) + node["A_y"])


def _node(n) -> str:
    return f"(({Fraction(n['A_xnum'], n['level'])},{n['A_y']}),({n['rho']},{n['sigma']}),{n['level']})"


def _pt(p: Sequence) -> str:
    return "(" + ",".join(str(v) for v in p) + ")"


def _flat(v) -> str:
    return v if isinstance(v, str) else json.dumps(v, sort_keys=True)


def _summary(results):
    if isinstance(results, dict) and results.get("kind") == "search_certificate":
        keys = ("start_count", "explored_count", "survivor_count", "min_start_v11",
                "checkpoint_digest")
        return [(k, results.get(k)) for k in keys]
    return []


def emit_report(results: Any, fmt: str = "json") -> str:
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")
    if fmt == "json":
        return json.dumps(results, indent=1, sort_keys=True) + "\n"
    header, rows, empty_note = _table(results)
    if not rows:
        rows = [[empty_note] + [""] * (len(header) - 1)]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()
    lines: List[str] = []
    for k, v in _summary(results):
        lines.append(f"- {k}: {v}")
    if lines:
        lines.append("")
    lines.append("| " + " | ".join(header) + " |")
    lines.append("|" + "---|" * len(header))
    for r in rows:
        lines.append("| " + " | ".join(str(c).replace("|", "\\|") for c in r) + " |")
    return "\n".join(lines) + "\n"
