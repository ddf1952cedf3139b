"""Command-line front end: coefficient tables, verification, relation search."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from . import verify
from .eisenstein import F_ROUTES, R_ROUTES, SERIES_KINDS, series_family
from .partitions import crank_counts_gf, rank_counts_brute
from .qseries import QSeries
from .relations import DEFAULT_GENERATORS, InsufficientOrder, find_relations

ORDER_ENV = "EISENTYPE_ORDER"
FALLBACK_ORDER = 20


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class CliConfig:
    subcommand: str
    order: Optional[int]
    fmt: str
    output: Optional[str]


def _default_order() -> int:
    raw = os.environ.get(ORDER_ENV)
    if raw is None:
        return FALLBACK_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{ORDER_ENV} must be an integer, got {raw!r}")
    if value < 1:
        raise UsageError(f"{ORDER_ENV} must be >= 1")
    return value


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _positive(text: str) -> int:
    value = _nonneg(text)
    if value < 1:
        raise argparse.ArgumentTypeError("expected an integer >= 1")
    return value


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="eisentype", description="Exact q-series for Eisenstein-type series and rank/crank moments.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    c = sub.add_parser("coeffs", help="print the coefficients of one series")
    c.add_argument("--object", required=True, choices=SERIES_KINDS)
    c.add_argument("--k", type=_nonneg, required=True, help="index (weight or moment order)")
    c.add_argument("--a", type=_positive)
    c.add_argument("--b", type=_positive)
    c.add_argument("--route", choices=F_ROUTES + R_ROUTES)
    c.add_argument("--order", type=_positive)
    c.add_argument("--format", choices=("json", "csv", "text"), default="text")
    c.add_argument("--output")

    v = sub.add_parser("verify", help="run identity checks")
    v.add_argument("--check", action="append", default=[], metavar="NAME")
    v.add_argument("--all", action="store_true")
    v.add_argument("--order", type=_positive)
    v.add_argument("--max-weight", type=_positive)
    v.add_argument("--degree", type=_nonneg)
    v.add_argument("--jobs", type=_positive, default=1)
    v.add_argument("--format", choices=("json", "text"), default="text")
    v.add_argument("--output")
    v.add_argument("--list", action="store_true", help="list check names and exit")

    r = sub.add_parser("relations", help="search for polynomial relations of one weight")
    r.add_argument("--weight", type=_positive, required=True)
    r.add_argument("--order", type=_positive)
    r.add_argument("--generators", help="comma-separated ids such as f2,f4,G2,G4")
    r.add_argument("--format", choices=("json", "text"), default="json")
    r.add_argument("--output")

    t = sub.add_parser("table", help="rank or crank counts as CSV")
    t.add_argument("--stat", choices=("rank", "crank"), required=True)
    t.add_argument("--order", type=_positive)
    t.add_argument("--format", choices=("csv", "json"), default="csv")
    t.add_argument("--output")
    return p


def _emit(text: str, path: Optional[str]) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def series_csv(series: QSeries) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["exponent", "coefficient"])
    for e, c in series.terms():
        w.writerow([str(e), str(c)])
    return buf.getvalue()


def series_text(label: str, series: QSeries) -> str:
    rows = [(str(e), str(c)) for e, c in series.terms()]
    width = max([len("exponent")] + [len(e) for e, _ in rows])
    order = "exact" if series.order is None else f"O(q^{series.order})"
    lines = [f"{label}  [{order}]", f"{'exponent':>{width}}  coefficient"]
    lines += [f"{e:>{width}}  {c}" for e, c in rows]
    return "\n".join(lines) + "\n"


def _cmd_coeffs(args) -> int:
    order = args.order or _default_order()
    if args.object == "g_general" and (args.a is None or args.b is None):
        raise UsageError("--object g_general needs --a and --b")
    if args.object != "g_general" and (args.a is not None or args.b is not None):
        raise UsageError("--a/--b only apply to --object g_general")
    route = args.route
    if route is not None:
        allowed = F_ROUTES if args.object == "f" else R_ROUTES if args.object == "R" else ()
        if route not in allowed:
            raise UsageError(f"--route {route} does not apply to --object {args.object}")
    if args.object in ("R", "C") and args.k % 2:
        print(f"note: odd {args.object} moments vanish identically; emitting the zero series", file=sys.stderr)
    try:
        fam = series_family(args.object, args.k, order, args.a, args.b, route)
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.format == "json":
        payload = fam.value.to_dict()
        payload["object"] = fam.label
        text = json.dumps(payload) + "\n"
    elif args.format == "csv":
        text = series_csv(fam.value)
    else:
        text = series_text(fam.label, fam.value)
    _emit(text, args.output)
    return 0


def _cmd_verify(args) -> int:
    if args.list:
        for name in verify.check_names():
            check = verify.CATALOG[name]
            tag = "" if check.gating else " (informational)"
            print(f"{name:<24} {check.description}{tag}")
        return 0
    names = verify.check_names() if args.all else list(args.check)
    if not names:
        raise UsageError("verify needs --check NAME or --all")
    unknown = [n for n in names if n not in verify.CATALOG]
    if unknown:
        raise UsageError(f"unknown check(s): {', '.join(unknown)}")
    order = args.order if args.order is not None else (
        _default_order() if ORDER_ENV in os.environ else None)
    params = {"order": order, "max_weight": args.max_weight, "degree": args.degree}
    try:
        reports = verify.run_checks(names, jobs=args.jobs, **params)
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.format == "json":
        text = json.dumps([r.to_dict() for r in reports], indent=2) + "\n"
    else:
        lines = [r.line() for r in reports]
        gating = [r for r in reports if r.gating]
        ok = sum(r.passed for r in gating)
        lines.append(f"{ok}/{len(gating)} gating checks passed")
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return 0 if all(r.passed for r in reports if r.gating or not args.all) else 1


def _cmd_relations(args) -> int:
    order = args.order or _default_order()
    gens = tuple(g.strip() for g in args.generators.split(",")) if args.generators else DEFAULT_GENERATORS
    try:
        result = find_relations(args.weight, order, gens)
    except (InsufficientOrder, ValueError) as exc:
        raise UsageError(str(exc))
    text = json.dumps(result.to_dict()) + "\n" if args.format == "json" else result.describe() + "\n"
    _emit(text, args.output)
    return 0


def _cmd_table(args) -> int:
    order = args.order or _default_order()
    if args.stat == "rank":
        if order > verify.MAX_BRUTE_ORDER:
            raise UsageError(f"rank table enumerates partitions; --order must be <= {verify.MAX_BRUTE_ORDER}")
        table = rank_counts_brute(order)
    else:
        table = crank_counts_gf(order)
    column = "N(m,n)" if args.stat == "rank" else "M(m,n)"
    rows = []
    for n in range(order):
        for m, c in sorted(table.row(n).items()):
            rows.append((n, str(m), str(c)))
    if args.format == "json":
        text = json.dumps({"stat": args.stat, "order": order,
                           "rows": [{"n": n, "m": m, "count": c} for n, m, c in rows]}) + "\n"
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "m", column])
        w.writerows(rows)
        text = buf.getvalue()
    _emit(text, args.output)
    return 0


_COMMANDS = {"coeffs": _cmd_coeffs, "verify": _cmd_verify, "relations": _cmd_relations, "table": _cmd_table}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required: " + ", ".join(_COMMANDS))
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
