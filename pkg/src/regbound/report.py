"""Rendering of reports as text tables, JSON and CSV.

Every renderer is deterministic: keys and rows come out in a fixed order so
identical inputs give byte-identical output.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any, Sequence

from .bounds import BoundReport, BoundRow
from .ck import RankTable
from .projection import VarietySpec


def spec_document(spec: VarietySpec) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "name": spec.name,
        "dim": spec.n,
        "ambient": spec.r,
        "coeffs": list(spec.hilbert.coeffs),
    }
    if spec.family is not None:
        doc["family"] = {"kind": type(spec.family).__name__.lower(), **vars(spec.family)}
    return doc


def rank_document(table: RankTable) -> dict[str, Any]:
    res = table.resolution
    return {
        "ambient": table.ambient,
        "k": table.k,
        "ranks": list(table.ranks),
        "rkE": table.rkE,
        "c1E": table.c1E,
        "bound": table.bound,
        "rkG": res.rank_g,
        "rkF": res.rank_f,
        "resolution": res.lines(),
        "provenance": "beilinson-c1",
    }


def row_document(row: BoundRow) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "m": row.m,
        "status": row.status.level.value,
        "bound": row.bound,
        "provenance": row.provenance,
        "status_detail": row.status.detail,
        "machinery_bound": row.machinery,
        "closed_form": row.closed_form,
    }
    if row.ranks is not None:
        doc["ranks"] = list(row.ranks.ranks)
        doc["rkE"] = row.ranks.rkE
        doc["c1E"] = row.ranks.c1E
    if row.error is not None:
        doc["error"] = row.error
    return doc


def report_document(report: BoundReport) -> dict[str, Any]:
    c = report.comparisons
    return {
        "spec": spec_document(report.spec),
        "rows": [row_document(row) for row in report.rows],
        "comparisons": {"eisenbud_goto": c.eisenbud_goto, "mumford": c.mumford, "bel": c.bel,
                        "provenance": "comparison"},
        "best": report.best,
    }


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def csv_text(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def report_csv(report: BoundReport) -> str:
    c = report.comparisons
    return csv_text(
        ["m", "status", "bound", "eg", "mumford", "bel"],
        [[row.m, row.status.level.value, row.bound, c.eisenbud_goto, c.mumford, c.bel]
         for row in report.rows],
    )


def text_table(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    cells = [[str(h) for h in header]] + [["" if v is None else str(v) for v in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def spec_line(spec: VarietySpec) -> str:
    return f"{spec.name}: n={spec.n} r={spec.r} c={list(spec.hilbert.coeffs)}"


def report_text(report: BoundReport) -> str:
    c = report.comparisons
    rows = [[row.m, row.status.level.value, row.bound, row.provenance, row.machinery,
             row.closed_form, row.rank_summary, row.error or ""] for row in report.rows]
    out = [spec_line(report.spec), ""]
    out.append(text_table(
        ["m", "status", "bound", "provenance", "beilinson-c1", "closed-form", "ranks", "error"],
        rows))
    out.append(f"comparison: eisenbud-goto={c.eisenbud_goto} mumford={c.mumford} bel={c.bel}")
    out.append(f"best guaranteed bound: {report.best if report.best is not None else 'none'}")
    return "\n".join(out) + "\n"


def ranks_text(spec: VarietySpec, m: int, table: RankTable) -> str:
    out = [spec_line(spec), f"projection to P^{m}, k={table.k}", ""]
    out.append(text_table(["i", "a_i"], list(enumerate(table.ranks))))
    out.append(f"rkE={table.rkE} c1E={table.c1E} bound(-c1E)={table.bound} "
               f"rkG={table.resolution.rank_g} rkF={table.resolution.rank_f}")
    out.append("")
    out.extend(table.resolution.lines())
    return "\n".join(out) + "\n"
