"""Command-line front end: ``dedekind <subcommand> ...``.

Exact values are written as ``num/den`` strings.  ``--approx`` adds decimal
columns suffixed ``_approx`` that are for reading only.

Exit codes: 0 success, 1 a verification found violations, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction
from math import gcd

from dedekind.rational import approx, format_rational
from dedekind.sums import dedekind_fast, dedekind_naive, normalize
from dedekind import extremal

EXIT_OK, EXIT_VIOLATIONS, EXIT_USAGE = 0, 1, 2

# CSV headers, one per record layout; kept stable
COLUMNS = {
    "sum": ["m", "n", "S"],
    "sum_both": ["m", "n", "S_fast", "S_naive", "match"],
    "scan_row": ["n", "m", "S_num", "S_den"],
    "candidate": ["k", "n", "m", "S", "origins"],
    "report_row": ["record", "theorem", "n", "m", "S", "reference", "checked_count", "violation_count"],
    "bound": ["k", "n", "name", "value"],
}
_EXACT_FIELDS = {"S", "S_fast", "S_naive", "reference", "value"}


class UsageError(Exception):
    pass


class Emitter:
    """Single writer for all records so output order is exactly emission order."""

    def __init__(self, stream, fmt: str, with_approx: bool, layout: str):
        self.stream = stream
        self.fmt = fmt
        self.with_approx = with_approx
        self.layout = layout
        self._writer = None

    def _columns(self):
        cols = list(COLUMNS[self.layout])
        if self.with_approx:
            if self.layout == "scan_row":
                cols.append("S_approx")
            else:
                cols += [f"{c}_approx" for c in cols if c in _EXACT_FIELDS]
        return cols

    def emit(self, kind: str, payload: dict):
        row = {}
        for key, value in payload.items():
            row[key] = format_rational(value) if isinstance(value, Fraction) else value
        if self.with_approx:
            for key, value in payload.items():
                if isinstance(value, Fraction):
                    row[f"{key}_approx"] = approx(value)
            if self.layout == "scan_row":
                row["S_approx"] = approx(Fraction(payload["S_num"], payload["S_den"]))
        if self.fmt == "json":
            self.stream.write(json.dumps({"kind": kind, "payload": row}) + "\n")
            return
        if self._writer is None:
            self._writer = csv.DictWriter(
                self.stream, fieldnames=self._columns(), extrasaction="ignore", lineterminator="\n"
            )
            self._writer.writeheader()
        self._writer.writerow({k: _csv_cell(v) for k, v in row.items()})


def _csv_cell(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return ";".join(f"{o['d']}:{o['c']}:{o['q']}" for o in value)
    return value


def parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            raise ValueError
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected A..B") from None
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return lo, hi


def cmd_compute(args, out):
    query = normalize(args.m, args.n)
    if args.method == "both":
        fast, naive = dedekind_fast(query), dedekind_naive(query)
        out.layout = "sum_both"
        out.emit("sum", {"m": query.m, "n": query.n, "S_fast": fast, "S_naive": naive, "match": fast == naive})
    else:
        value = dedekind_fast(query) if args.method == "fast" else dedekind_naive(query)
        out.emit("sum", {"m": query.m, "n": query.n, "S": value})
    return EXIT_OK


def cmd_scan(args, out):
    if args.n < 2 or args.top < 1:
        raise UsageError("scan needs --n >= 2 and --top >= 1")
    for m, value in extremal.scan_top(args.n, args.top, workers=args.threads):
        out.emit("scan_row", {"n": args.n, "m": m, "S_num": value.numerator, "S_den": value.denominator})
    return EXIT_OK


def cmd_candidates(args, out):
    if args.k < 1 or args.n <= args.k:
        raise UsageError("candidates needs 1 <= k < n")
    for cand in extremal.candidate_set(args.k, args.n):
        out.emit("candidate", {
            "k": args.k,
            "n": args.n,
            "m": cand.m,
            "S": dedekind_fast(cand.m, args.n),
            "origins": [{"d": d, "c": c, "q": q} for d, c, q in cand.origins],
        })
    return EXIT_OK


def cmd_verify(args, out):
    lo, hi = parse_range(args.n_range)
    if args.theorem == "t1":
        if args.k is None or args.k < 1:
            raise UsageError("verify t1 needs --k >= 1")
        report = extremal.verify_theorem1(args.k, lo, hi, workers=args.threads)
    else:
        report = extremal.verify_theorem2(lo, hi, workers=args.threads)
    for m, n, value, ref in report.violations:
        out.emit("report_row", {
            "record": "violation", "theorem": args.theorem, "n": n, "m": m, "S": value, "reference": ref,
        })
    out.emit("report_row", {
        "record": "summary",
        "theorem": args.theorem,
        "range": report.parameter_range,
        "checked_count": report.checked_count,
        "violation_count": len(report.violations),
    })
    return EXIT_OK if report.holds else EXIT_VIOLATIONS


def cmd_bounds(args, out):
    k, n = args.k, args.n
    l = 2 * k + 2
    if k < 1 or n <= l:
        raise UsageError(f"bounds needs k >= 1 and n > 2k + 2 = {l}")
    rows = [("ordinary_bound", extremal.ordinary_bound(k, n))]
    if gcd(k, n) == 1:
        lower, upper = extremal.skn_bounds(k, n)
        rows += [("skn_lower", lower), ("S_k_n", dedekind_fast(k, n)), ("skn_upper", upper)]
    rows += [
        ("deviation_cap", Fraction(2 * l + 5)),
        ("candidate_count_bound", Fraction(extremal.candidate_count_bound(k))),
        ("theorem1_threshold", Fraction(extremal.theorem1_threshold(k))),
    ]
    for name, value in rows:
        out.emit("bound", {"k": k, "n": n, "name": name, "value": value})
    return EXIT_OK


def cmd_thresholds(args, out):
    ordinary, near = extremal.theorem2_thresholds()
    out.emit("bound", {"k": 2, "n": "", "name": "theorem2_ordinary", "value": Fraction(ordinary)})
    out.emit("bound", {"k": 2, "n": "", "name": "theorem2_nonordinary", "value": Fraction(near)})
    if args.k is not None:
        value = Fraction(extremal.theorem1_threshold(args.k))
        out.emit("bound", {"k": args.k, "n": "", "name": "theorem1_threshold", "value": value})
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["csv", "json"], default="csv")
    common.add_argument("--approx", action="store_true", help="add display-only decimal columns")

    threads = _Parser(add_help=False)
    threads.add_argument("--threads", type=int, default=os.cpu_count() or 1)

    parser = _Parser(prog="dedekind", description="Exact Dedekind sums and their largest values.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", parents=[common], help="S(m, n)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=["fast", "naive", "both"], default="fast")
    p.set_defaults(func=cmd_compute, layout="sum")

    p = sub.add_parser("scan", parents=[common, threads], help="largest S(m, n) for one n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--top", type=int, default=10)
    p.set_defaults(func=cmd_scan, layout="scan_row")

    p = sub.add_parser("candidates", parents=[common], help="the m = (nc + q)/d that may reach S(k, n)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_candidates, layout="candidate")

    p = sub.add_parser("verify", parents=[common, threads], help="exhaustive check over an n-range")
    p.add_argument("theorem", choices=["t1", "t2"])
    p.add_argument("--n-range", required=True, help="A..B, inclusive")
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_verify, layout="report_row")

    p = sub.add_parser("bounds", parents=[common], help="explicit bounds for k and n")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_bounds, layout="bound")

    p = sub.add_parser("thresholds", parents=[common], help="explicit n thresholds")
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_thresholds, layout="bound")
    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "threads", 1) < 1:
            raise UsageError("--threads must be >= 1")
        out = Emitter(stdout, args.format, args.approx, args.layout)
        return args.func(args, out)
    except UsageError as exc:
        print(f"dedekind: {exc}", file=stderr)
        return EXIT_USAGE
    except ValueError as exc:
        # bad arguments that reach the library, e.g. gcd(m, n) != 1 or n = 0
        print(f"dedekind: {exc}", file=stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
