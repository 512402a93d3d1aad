"""Command-line front end: coefficient queries, tables, sweeps, cross-checks.

Exit codes: 0 success / identity verified, 1 mathematical disagreement
found, 2 usage error.  Data goes to stdout, diagnostics to stderr.  All
numbers are printed in full decimal expansion.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import formulas, verifier
from .lagrange import lagrange_coeff
from .series import Rect

EXIT_OK = 0
EXIT_DISAGREEMENT = 1
EXIT_USAGE = 2

FORMATS = ("pretty", "csv", "json-lines")
METHODS = ("closed", "series", "radical", "lagrange")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kirkman",
        description="Exact coefficients and identity sweeps for Kirkman's convolution identity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    coeff = sub.add_parser("coeff", help="one coefficient by the closed form")
    coeff.add_argument("--p", type=_positive_int, required=True)
    coeff.add_argument("--m", type=_nonnegative_int, required=True)
    coeff.add_argument("--n", type=_nonnegative_int, required=True)
    coeff.add_argument("--format", choices=FORMATS, default="pretty")
    coeff.set_defaults(handler=_cmd_coeff)

    expand = sub.add_parser("expand", help="full coefficient table over a rectangle")
    expand.add_argument("--p", type=_positive_int, required=True)
    expand.add_argument("--max-m", type=_nonnegative_int, required=True)
    expand.add_argument("--max-n", type=_nonnegative_int, required=True)
    expand.add_argument("--method", choices=METHODS, default="closed")
    expand.add_argument("--format", choices=FORMATS, default="pretty")
    expand.set_defaults(handler=_cmd_expand)

    verify = sub.add_parser("verify", help="sweep the convolution identity")
    verify.add_argument("--r", type=_positive_int, required=True)
    verify.add_argument("--s", type=_positive_int, required=True)
    verify.add_argument("--max-M", type=_nonnegative_int, required=True)
    verify.add_argument("--max-N", type=_nonnegative_int, default=None)
    verify.add_argument("--cayley", action="store_true", help="restrict to N = 0")
    verify.add_argument("--format", choices=FORMATS, default="pretty")
    verify.set_defaults(handler=_cmd_verify)

    crosscheck = sub.add_parser("crosscheck", help="compare all routes cellwise")
    crosscheck.add_argument("--p", type=_positive_int, required=True)
    crosscheck.add_argument("--max-m", type=_nonnegative_int, required=True)
    crosscheck.add_argument("--max-n", type=_nonnegative_int, required=True)
    crosscheck.add_argument("--format", choices=FORMATS, default="pretty")
    crosscheck.set_defaults(handler=_cmd_crosscheck)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.handler(args, parser)


# ---- rendering helpers ----


def _plain(value) -> object:
    # exact and JSON-safe: integral Fractions become ints, anything else a string
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else str(value)
    return value


def _emit_rows(fmt: str, header: Sequence[str], rows: Sequence[Sequence[object]]) -> None:
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow(["" if v is None else v for v in row])
        sys.stdout.write(buffer.getvalue())
    elif fmt == "json-lines":
        out = [json.dumps(dict(zip(header, row))) for row in rows]
        sys.stdout.write("".join(line + "\n" for line in out))
    else:
        raise AssertionError(f"unhandled format {fmt!r}")


# ---- subcommands ----


def _cmd_coeff(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    value = formulas.closed_form_coeff(args.p, args.m, args.n)
    if args.format == "pretty":
        print(value)
    else:
        _emit_rows(args.format, ("m", "n", "coefficient"), [(args.m, args.n, value)])
    return EXIT_OK


def _cmd_expand(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.method == "radical" and args.p != 1:
        parser.error("--method radical is only defined for --p 1")
    window = Rect(args.max_m, args.max_n)
    if args.method == "closed":
        cells = {(m, n): formulas.closed_form_coeff(args.p, m, n) for m, n in window.cells()}
    elif args.method == "series":
        table = formulas.power_series(args.p, window)
        cells = {(m, n): _plain(table[m, n]) for m, n in window.cells()}
    elif args.method == "radical":
        table = formulas.radical_series(window)
        cells = {(m, n): _plain(table[m, n]) for m, n in window.cells()}
    else:
        cells = {(m, n): lagrange_coeff(args.p, m, n) for m, n in window.cells()}

    rows = [(m, n, cells[m, n]) for m, n in window.cells()]
    if args.format == "pretty":
        print("\n".join(f"[z^{m} w^{n}] {value}" for m, n, value in rows))
    else:
        _emit_rows(args.format, ("m", "n", "coefficient"), rows)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.cayley:
        if args.max_N not in (None, 0):
            parser.error("--cayley fixes --max-N to 0")
        max_N = 0
    elif args.max_N is None:
        parser.error("--max-N is required unless --cayley is given")
    else:
        max_N = args.max_N

    if args.cayley and args.r == 1 and args.s == 1:
        report = verifier.verify_cayley(args.max_M)
    else:
        report = verifier.verify_generalized(args.r, args.s, args.max_M, max_N)

    if args.format == "pretty":
        if report.passed:
            print(f"PASS {report.params_range}: {report.checked_count} cases, identity holds")
        else:
            c = report.first_counterexample
            print(
                f"FAIL {report.params_range}: counterexample at M={c.M} N={c.N}: "
                f"lhs={c.lhs} rhs={c.rhs}"
            )
    else:
        rows = []
        for M, N, lhs, rhs in verifier.sweep_cells(args.r, args.s, args.max_M, max_N):
            ok = lhs == rhs
            rows.append((M, N, lhs, rhs, "ok" if ok else "fail"))
            if not ok:
                break
        _emit_rows(args.format, ("M", "N", "lhs", "rhs", "status"), rows)
    return EXIT_OK if report.passed else EXIT_DISAGREEMENT


def _cmd_crosscheck(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    reports = verifier.cross_check_methods(args.p, args.max_m, args.max_n)
    all_agree = all(r.agree for r in reports)

    if args.format == "pretty":
        if all_agree:
            print(
                f"PASS p={args.p} 0<=m<={args.max_m} 0<=n<={args.max_n}: "
                f"{len(reports)} cells agree on all routes"
            )
        else:
            first = next(r for r in reports if not r.agree)
            parts = [
                f"closed={_plain(first.value_closed)}",
                f"series={_plain(first.value_series)}",
                f"lagrange={_plain(first.value_lagrange)}",
            ]
            if first.value_radical is not None:
                parts.append(f"radical={_plain(first.value_radical)}")
            print(
                f"FAIL p={args.p}: disagreement at m={first.index.m} n={first.index.n}: "
                + " ".join(parts)
            )
    else:
        header = ("m", "n", "closed", "series", "lagrange", "radical", "agree")
        rows = [
            (
                r.index.m,
                r.index.n,
                _plain(r.value_closed),
                _plain(r.value_series),
                _plain(r.value_lagrange),
                None if r.value_radical is None else _plain(r.value_radical),
                r.agree,
            )
            for r in reports
        ]
        if args.format == "csv":
            rows = [row[:-1] + ("true" if row[-1] else "false",) for row in rows]
        _emit_rows(args.format, header, rows)
    return EXIT_OK if all_agree else EXIT_DISAGREEMENT


if __name__ == "__main__":
    sys.exit(main())
