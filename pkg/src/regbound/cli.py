"""Command line front end.

    regbound bound --spec elliptic-quartic --m 2
    regbound table --spec veronese-surface --format csv --plot bounds.png
    regbound ranks --spec twisted-cubic
    regbound splittings --spec elliptic-quartic --secant 3
    regbound verify --rmax 30 --lmax 20
    regbound catalog

``--spec`` takes a catalog name (``name`` or ``name:key=value,...``), a JSON
file, or inline JSON. Exit codes: 0 success, 2 parse/validation error,
3 mathematical inconsistency, 4 incompatible request.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from itertools import islice
from typing import Any, Sequence

from . import report as rp
from .bounds import bound_row, bound_table, theorem_a_bound, machinery_bound
from .catalog import catalog_instances, load_spec
from .ck import beilinson_euler_defect, perturb_profile, rank_table, verify_coeff_identity
from .errors import ParseError, RegboundError
from .projection import m_zero, projection_status, pushforward_chi, table_relation_check
from .splitting import component_range, iter_splittings, max_secant_length, secant_splitting

OK, INCONSISTENT = 0, 3


@dataclass
class Outcome:
    doc: dict[str, Any]
    text: str
    csv: str
    exit_code: int = OK


def _bound(args) -> Outcome:
    spec = load_spec(args.spec)
    m = args.m[0] if args.m else m_zero(spec.n, spec.r)
    row = bound_row(spec, m, args.assume_fibers)
    doc = {"spec": rp.spec_document(spec), **rp.row_document(row)}
    text = (f"{rp.spec_line(spec)}\n"
            f"m={row.m} bound={row.bound} status={row.status.level.value} "
            f"({row.status.detail}) provenance={row.provenance}\n")
    if row.error:
        text += f"error: {row.error}\n"
    report = bound_table(spec, [m], args.assume_fibers)
    return Outcome(doc, text, rp.report_csv(report), INCONSISTENT if row.error else OK)


def _table(args) -> Outcome:
    spec = load_spec(args.spec)
    report = bound_table(spec, args.m or None, args.assume_fibers)
    doc = rp.report_document(report)
    if args.plot:
        from .plotting import plot_report

        doc["figure"] = str(plot_report(report, args.plot))
    code = INCONSISTENT if report.inconsistent_rows else OK
    return Outcome(doc, rp.report_text(report), rp.report_csv(report), code)


def _parse_perturb(text: str) -> tuple[int, int]:
    t, _, delta = text.partition(":")
    try:
        return int(t), int(delta or 1)
    except ValueError as exc:
        raise ParseError(f"expected TWIST[:DELTA], got {text!r}", "perturb") from exc


def _ranks(args) -> Outcome:
    spec = load_spec(args.spec)
    m = args.m[0] if args.m else spec.r
    profile = pushforward_chi(spec, m)
    if args.perturb:
        profile = perturb_profile(profile, *_parse_perturb(args.perturb))
    table = rank_table(profile)
    doc = {"spec": rp.spec_document(spec), "m": m, **rp.rank_document(table)}
    csv = rp.csv_text(["i", "a_i"], list(enumerate(table.ranks)))
    return Outcome(doc, rp.ranks_text(spec, m, table), csv)


def _splittings(args) -> Outcome:
    spec = load_spec(args.spec)
    table = rank_table(pushforward_chi(spec, spec.r))
    low, high = component_range(spec.d, spec.r, spec.n)
    found = list(islice(iter_splittings(table.rkE, table.c1E, low), args.limit + 1))
    truncated = len(found) > args.limit
    found = found[: args.limit]
    longest = max_secant_length(table.rkE, table.c1E, low)
    doc: dict[str, Any] = {
        "spec": rp.spec_document(spec),
        "rkE": table.rkE,
        "c1E": table.c1E,
        "component_range": [low, high],
        "splittings": [list(s.components) for s in found],
        "truncated": truncated,
        "max_secant_length": longest,
    }
    lines = [rp.spec_line(spec),
             f"rkE={table.rkE} c1E={table.c1E} components in [{low}, {high}]",
             f"max secant length: {longest}",
             f"splitting types ({len(found)}{'+, truncated' if truncated else ''}):"]
    lines += [f"  {s}" for s in found]
    if args.secant is not None:
        forced = secant_splitting(table.rkE, table.c1E, args.secant, low)
        doc["secant"] = {"l": args.secant, "splitting": list(forced.components)}
        lines.append(f"forced splitting on a {args.secant}-secant line: {forced}")
    csv = rp.csv_text(["components"], [[" ".join(map(str, s.components))] for s in found])
    return Outcome(doc, "\n".join(lines) + "\n", csv)


def _verify(args) -> Outcome:
    checks: list[tuple[str, bool, str]] = []
    ident = verify_coeff_identity(args.rmax, args.lmax)
    checks.append(("coefficient-identity", ident.passed,
                   f"{ident.checked} cases" + (f", counterexample {ident.counterexample}"
                                              if ident.counterexample else "")))
    for _, spec in catalog_instances():
        for m in range(spec.n + 1, spec.r + 1):
            name = f"{spec.name} m={m}"
            try:
                a, b = theorem_a_bound(spec, m), machinery_bound(spec, m)
                checks.append((f"route-equality {name}", a == b, f"{a} vs {b}"))
                profile = pushforward_chi(spec, m)
                ranks = rank_table(profile).ranks
                bad = [t for t in range(-m, m + 1) if beilinson_euler_defect(profile, ranks, t)]
                checks.append((f"euler-consistency {name}", not bad, f"failing twists {bad}"))
            except RegboundError as exc:
                checks.append((f"route-equality {name}", False, str(exc)))
            if projection_status(spec.n, spec.r, m).guaranteed:
                rel = table_relation_check(spec, m)
                checks.append((f"table-relations {name}", rel.passed, f"{len(rel.rows)} rows"))
    passed = all(ok for _, ok, _ in checks)
    doc = {"passed": passed,
           "checks": [{"check": c, "passed": ok, "detail": d} for c, ok, d in checks]}
    text = rp.text_table(["check", "result", "detail"],
                         [[c, "pass" if ok else "FAIL", d] for c, ok, d in checks])
    text += f"\n{'all checks passed' if passed else 'FAILURES detected'}\n"
    csv = rp.csv_text(["check", "passed"], [[c, ok] for c, ok, _ in checks])
    return Outcome(doc, text, csv, OK if passed else INCONSISTENT)


def _catalog(args) -> Outcome:
    rows = []
    for entry, spec in catalog_instances():
        report = bound_table(spec)
        expected = entry.expected_value(spec)
        rows.append({
            "entry": entry.name,
            "name": spec.name,
            "dim": spec.n,
            "ambient": spec.r,
            "coeffs": list(spec.hilbert.coeffs),
            "best": report.best,
            "expected": expected,
            "sharp": None if expected is None else report.best == expected,
            "note": entry.note,
        })
    header = ["name", "dim", "ambient", "coeffs", "best", "expected", "sharp", "note"]
    table = [[r[h] for h in header] for r in rows]
    return Outcome({"entries": rows}, rp.text_table(header, table), rp.csv_text(header, table))


COMMANDS = {
    "bound": _bound,
    "table": _table,
    "ranks": _ranks,
    "splittings": _splittings,
    "verify": _verify,
    "catalog": _catalog,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="regbound", description="Exact Castelnuovo-Mumford regularity bounds.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help: str, spec: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        if spec:
            p.add_argument("--spec", required=True,
                           help="catalog name[:k=v,...], JSON file, or inline JSON")
        p.add_argument("--format", choices=["text", "json", "csv"], default="text")
        return p

    for name, help in (("bound", "bound for one projection target"),
                       ("table", "bounds for every projection target"),
                       ("ranks", "Beilinson rank table of the projected ideal sheaf")):
        p = add(name, help)
        p.add_argument("--m", type=int, action="append",
                       help="projection target (repeatable for table)")
        if name != "ranks":
            p.add_argument("--assume-fibers", action="store_true",
                           help="treat the fiber vanishing hypothesis as given")
    sub.choices["table"].add_argument("--plot", metavar="PATH", help="also write a figure")
    sub.choices["ranks"].add_argument(
        "--perturb", metavar="TWIST[:DELTA]",
        help="add DELTA (default 1) to chi(F(TWIST)) before building the table")

    p = add("splittings", "splitting types of E on lines (unprojected)")
    p.add_argument("--secant", type=int, help="length l of a secant line")
    p.add_argument("--limit", type=int, default=200, help="maximum types listed")

    p = add("verify", "run the identity suite", spec=False)
    p.add_argument("--rmax", type=int, default=30)
    p.add_argument("--lmax", type=int, default=20)

    add("catalog", "list catalog entries with best bounds", spec=False)
    return parser


def run_command(command: str, args: argparse.Namespace) -> Outcome:
    return COMMANDS[command](args)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        outcome = run_command(args.command, args)
    except RegboundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    if args.format == "json":
        sys.stdout.write(rp.dumps(outcome.doc))
    elif args.format == "csv":
        sys.stdout.write(outcome.csv)
    else:
        sys.stdout.write(outcome.text)
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())
