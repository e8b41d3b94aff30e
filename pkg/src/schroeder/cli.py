"""Command-line entry point.

Data goes to stdout, diagnostics to stderr.  Exit status: 0 success,
1 a verification found a failure, 2 invalid input.

    python -m schroeder seq --family sd --d 2 --n 1..8 --format csv
    python -m schroeder series --kind narayana --d -1 --n-max 12
    python -m schroeder triangle --kind small --n 1..6
    python -m schroeder objects --kind trees --n 4 --emit
    python -m schroeder bijections --name alpha --n 4 --emit-pairs
    python -m schroeder parity --n 1..10
    python -m schroeder asym --d 1 --n 100 --compare-exact
    python -m schroeder oeis-check --seq A001003 --bfile b001003.txt --offset-shift -1 --n-max 8
    python -m schroeder verify --suite all --n-max 7
"""
from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from . import asymptotics, bijections, objects, reference, sequences, series, triangles, verify
from .numeric import format_rational, parse_rational, rational_to_json


class UsageError(Exception):
    pass


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _range_arg(text: str) -> range:
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed range {text!r}; expected 'a..b' or 'n'") from None
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"range {text!r} must satisfy 1 <= a <= b")
    return range(lo, hi + 1)


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _float_arg(text: str) -> Fraction:
    # Kept exact so --compare-exact can use the same value.
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"malformed number {text!r}") from None


# --------------------------------------------------------------------------
# Output helpers
# --------------------------------------------------------------------------

def _cell(v, fmt: str):
    if isinstance(v, Fraction):
        return rational_to_json(v) if fmt == "json" else format_rational(v)
    return v


def _emit_table(header: Sequence[str], rows: List[Sequence], fmt: str, out) -> None:
    if fmt == "json":
        json.dump([{h: _cell(v, fmt) for h, v in zip(header, row)} for row in rows], out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([_cell(v, fmt) for v in row])
        out.write(buf.getvalue())
    else:
        for row in rows:
            out.write(" ".join(str(_cell(v, fmt)) for v in row) + "\n")


def _emit_json(obj, out) -> None:
    json.dump(obj, out, indent=2)
    out.write("\n")


# --------------------------------------------------------------------------
# Subcommands
# --------------------------------------------------------------------------

def cmd_seq(args, out) -> int:
    hi = args.n.stop - 1
    if args.family == "sd":
        vals = sequences.sd_values(args.d, hi, args.method)
    else:
        vals = sequences.sbar_values(args.d, hi, args.method)
    rows = [(n, vals[n - 1]) for n in args.n]
    _emit_table(["n", "value"], rows, args.format, out)
    return 0


def cmd_series(args, out) -> int:
    fn = series.sd_series if args.kind == "sd" else series.narayana_series
    prefix = fn(args.d, args.n_max)
    rows = [(n, c) for n, c in enumerate(prefix.coefficients)]
    _emit_table(["n", "coefficient"], rows, args.format, out)
    return 0


def cmd_triangle(args, out) -> int:
    fn = triangles.ROW_FUNCTIONS[args.kind]
    rows = [(n, k, v) for n in args.n for k, v in enumerate(fn(n).entries)]
    _emit_table(["n", "k", "value"], rows, args.format, out)
    return 0


_GENERATORS = {
    "trees": objects.enumerate_schroeder_trees,
    "small": objects.enumerate_small_schroeder_paths,
    "large": objects.enumerate_large_schroeder_paths,
    "dyck": objects.enumerate_dyck_paths,
}


def cmd_objects(args, out) -> int:
    gen = _GENERATORS[args.kind](args.n, args.max_objects)
    if args.emit:
        for obj in gen:
            out.write((obj.encode() if args.kind == "trees" else obj.steps) + "\n")
        return 0
    by_stratum: dict = {}
    total = 0
    for obj in gen:
        k = obj.internal_nodes() if args.kind == "trees" else obj.steps.count(objects.UP)
        by_stratum[k] = by_stratum.get(k, 0) + 1
        total += 1
    if args.format == "json":
        _emit_json({"kind": args.kind, "n": args.n, "count": total,
                    "by_stratum": {str(k): v for k, v in sorted(by_stratum.items())}}, out)
    else:
        _emit_table(["k", "count"], sorted(by_stratum.items()) + [("total", total)], args.format, out)
    return 0


def cmd_bijections(args, out) -> int:
    rep = bijections.CHECKS[args.name](args.n, args.max_objects)
    if args.emit_pairs:
        for a, b in bijections.mapping_pairs(args.name, args.n, args.max_objects):
            out.write(f"{a or '(empty)'} → {b or '(empty)'}\n")
    _emit_json(rep.to_dict(), out)
    return 0 if rep.passed else 1


def cmd_parity(args, out) -> int:
    rows = []
    for n in args.n:
        even, odd = objects.peak_parity_counts(n, args.max_objects)
        rows.append((n, even, odd))
    _emit_table(["n", "even", "odd"], rows, args.format, out)
    return 0


def cmd_asym(args, out) -> int:
    d = float(args.d)
    prof = asymptotics.build_profile(d)
    result = {"profile": prof.to_dict(), "n": args.n,
              "estimate": asymptotics.asymptotic_estimate(d, args.n),
              "log_estimate": asymptotics.log_asymptotic_estimate(d, args.n)}
    if args.compare_exact:
        result["exact"] = asymptotics.compare_exact(args.d, args.n)
    _emit_json(result, out)
    return 0


def cmd_oeis_check(args, out) -> int:
    if args.bfile:
        with open(args.bfile, encoding="ascii") as fh:
            text = fh.read()
    elif args.fetch:
        text = reference.fetch_bfile(args.seq, enable_network=args.enable_network)
    elif args.seq in reference.BFILE_FIXTURES:
        text = reference.serialize_bfile(reference.fixture_bfile(args.seq))
    else:
        raise UsageError(f"no --bfile or --fetch given and no embedded fixture for {args.seq}")
    bfile = reference.parse_bfile(text, args.seq)
    if args.family == "sd":
        vals = sequences.sd_values(args.d, args.n_max)
    else:
        vals = sequences.sbar_values(args.d, args.n_max)
    ints = {}
    for n, v in enumerate(vals, start=1):
        ints[n] = v.numerator if v.denominator == 1 else v
    rep = reference.compare_sequence(ints, bfile, args.offset_shift)
    _emit_json(rep.to_dict(), out)
    return 0 if rep.ok else 1


def cmd_verify(args, out) -> int:
    grid = args.d_grid if args.d_grid else None
    checks = verify.run_suite(args.suite, args.n_max, grid)
    _emit_json(verify.report(checks), out)
    return 0 if all(c.passed for c in checks) else 1


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["csv", "json", "plain"], default="plain")
    common.add_argument("--max-objects", type=_positive_int, default=None, metavar="N",
                        help=f"override the enumeration bound (default {objects.ENUMERATION_LIMIT})")
    common.add_argument("--enable-network", action="store_true")

    parser = argparse.ArgumentParser(prog="schroeder", description="Weighted Schroeder numbers and friends.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", parents=[common], help="s_d(n) or sbar_d(n) over a range of n")
    p.add_argument("--family", choices=["sd", "sbar"], default="sd")
    p.add_argument("--d", type=_rational_arg, required=True)
    p.add_argument("--n", type=_range_arg, required=True, help="inclusive range a..b")
    p.add_argument("--method", choices=[m.value for m in sequences.Method], default="auto")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("series", parents=[common], help="power series coefficients")
    p.add_argument("--kind", choices=["sd", "narayana"], default="sd")
    p.add_argument("--d", type=_rational_arg, required=True)
    p.add_argument("--n-max", type=_positive_int, required=True)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("triangle", parents=[common], help="triangle rows s(n,k), c(n,k), sbar(n,k)")
    p.add_argument("--kind", choices=sorted(triangles.ROW_FUNCTIONS), default="small")
    p.add_argument("--n", type=_range_arg, required=True)
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("objects", parents=[common], help="enumerate trees or paths")
    p.add_argument("--kind", choices=sorted(_GENERATORS), required=True)
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--emit", action="store_true", help="print one canonical encoding per line")
    p.set_defaults(func=cmd_objects)

    p = sub.add_parser("bijections", parents=[common], help="exhaustively check a bijection")
    p.add_argument("--name", choices=list(bijections.CHECKS), required=True)
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--emit-pairs", action="store_true")
    p.set_defaults(func=cmd_bijections)

    p = sub.add_parser("parity", parents=[common], help="Dyck paths by peak-count parity")
    p.add_argument("--n", type=_range_arg, required=True)
    p.set_defaults(func=cmd_parity)

    p = sub.add_parser("asym", parents=[common], help="asymptotic profile and estimate")
    p.add_argument("--d", type=_float_arg, required=True)
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--compare-exact", action="store_true")
    p.set_defaults(func=cmd_asym)

    p = sub.add_parser("oeis-check", parents=[common], help="compare a sequence with a b-file")
    p.add_argument("--seq", required=True)
    src = p.add_mutually_exclusive_group()
    src.add_argument("--bfile")
    src.add_argument("--fetch", action="store_true")
    p.add_argument("--family", choices=["sd", "sbar"], default="sd")
    p.add_argument("--d", type=_rational_arg, default=Fraction(1))
    p.add_argument("--offset-shift", type=int, default=0)
    p.add_argument("--n-max", type=_positive_int, default=8)
    p.set_defaults(func=cmd_oeis_check)

    p = sub.add_parser("verify", parents=[common], help="run identity verification suites")
    p.add_argument("--suite", choices=list(verify.SUITES) + ["all"], default="all")
    p.add_argument("--n-max", type=_positive_int, default=8)
    p.add_argument("--d-grid", type=_rational_arg, nargs="+", default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err), contextlib.redirect_stdout(out):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, ValueError, ZeroDivisionError, OSError, reference.NetworkDisabledError,
            reference.FetchError) as exc:
        print(f"schroeder {args.command}: {exc}", file=err)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
