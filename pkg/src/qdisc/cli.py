"""Command line interface.

Exit status: 0 when everything holds, 1 when a check or verification fails,
2 for usage, parse and evaluation errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Sequence, TextIO

from .evaluator import EvalError, Evaluator, KindMismatch, format_value
from .expr import ParseError, parse
from .integral import CokernelDecomposition, cokernel_reduce
from .scalar import ScalarDivisionByZero
from .suite import DEFAULT_CONES, DEFAULT_Q_SAMPLES, SuiteOptions, verify_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _int_list(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma separated list of integers: {text!r}")
    if any(v < 2 for v in values):
        raise argparse.ArgumentTypeError("cone orders must be at least 2")
    return values


def _fraction_list(text: str) -> list[Fraction]:
    try:
        return [Fraction(part.strip()) for part in text.split(",") if part.strip()]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a comma separated list of rationals: {text!r}")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qdisc",
        description="Exact computations in the quantum disc and its calculus.")
    parser.add_argument("-N", "--cone-order", type=int, default=2, metavar="N",
                        help="order N of the cone generator y = z^N (default 2)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate an expression")
    p.add_argument("expr")
    p = sub.add_parser("check", help="decide an equality 'lhs == rhs'")
    p.add_argument("expr")
    p = sub.add_parser("reduce", help="split an element as constant + divergence")
    p.add_argument("expr")

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--max-k", type=_positive, default=8)
    p.add_argument("--max-l", type=_positive, default=8)
    p.add_argument("--cone", type=_int_list, default=list(DEFAULT_CONES),
                   help="comma separated cone orders (default 2,3,4,5,6)")
    p.add_argument("--q-samples", type=_fraction_list, default=list(DEFAULT_Q_SAMPLES),
                   help="comma separated rational q values for numeric cross-checks")
    p.add_argument("--json", metavar="PATH", help="write the JSON report ('-' for stdout)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--no-timing", action="store_true",
                   help="omit the elapsed time from the JSON report")
    p.add_argument("--tamper", action="append", default=[], help=argparse.SUPPRESS)

    sub.add_parser("repl", help="interactive session")
    return parser


def _report_error(exc: Exception, err: TextIO) -> int:
    if isinstance(exc, ParseError):
        print(f"parse error: {exc}", file=err)
    elif isinstance(exc, KindMismatch):
        print(f"kind mismatch: {exc}", file=err)
    elif isinstance(exc, ScalarDivisionByZero):
        print(f"error: {exc}", file=err)
    else:
        print(f"type error: {exc}", file=err)
    return EXIT_USAGE


_ERRORS = (ParseError, EvalError, ScalarDivisionByZero, ValueError, ArithmeticError)


def run_eval(text: str, ev: Evaluator, out: TextIO, err: TextIO) -> int:
    try:
        value = ev.eval(parse(text))
    except _ERRORS as exc:
        return _report_error(exc, err)
    print(format_value(value), file=out)
    if isinstance(value, bool):
        return EXIT_OK if value else EXIT_FAIL
    return EXIT_OK


def run_check(text: str, ev: Evaluator, out: TextIO, err: TextIO) -> int:
    try:
        result = ev.check(parse(text))
    except _ERRORS as exc:
        return _report_error(exc, err)
    print(result, file=out)
    return EXIT_OK if result.equal else EXIT_FAIL


def run_reduce(text: str, ev: Evaluator, out: TextIO, err: TextIO) -> int:
    try:
        value = ev.eval(parse(text))
        dec = value if isinstance(value, CokernelDecomposition) else \
            cokernel_reduce(ev._algebra(value, "reduce"))
    except _ERRORS as exc:
        return _report_error(exc, err)
    residual = dec.residual()
    print(f"constant: {dec.constant}", file=out)
    print(f"f(w):  {dec.witness.f_omega}", file=out)
    print(f"f(ws): {dec.witness.f_omega_star}", file=out)
    print(f"residual: {residual}", file=out)
    return EXIT_OK if residual.is_zero() else EXIT_FAIL


def run_verify(args, out: TextIO) -> int:
    opts = SuiteOptions(max_k=args.max_k, max_l=args.max_l, cones=args.cone,
                        q_samples=args.q_samples, seed=args.seed, jobs=args.jobs,
                        tamper=args.tamper)
    report = verify_suite(opts)
    for rec in report.failures():
        print(f"FAIL {rec.name} {rec.paper_ref}: {rec.to_json()['detail']}", file=out)
    print(report.summary(), file=out)
    if args.json:
        text = report.dumps(timing=not args.no_timing)
        if args.json == "-":
            print(text, file=out)
        else:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
    return EXIT_OK if report.ok else EXIT_FAIL


def run_repl(ev: Evaluator, inp: TextIO, out: TextIO, err: TextIO) -> int:
    """Read one expression per line; equalities are checked, others evaluated."""
    interactive = inp.isatty()
    while True:
        if interactive:
            out.write("qdisc> ")
            out.flush()
        line = inp.readline()
        if not line:
            break
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line in (":q", ":quit", "quit", "exit"):
            break
        if line.startswith(":reduce "):
            run_reduce(line[len(":reduce "):], ev, out, err)
        elif "==" in line:
            run_check(line, ev, out, err)
        else:
            run_eval(line, ev, out, err)
    return EXIT_OK


def main(argv: Sequence[str] | None = None, out: TextIO | None = None,
         err: TextIO | None = None, inp: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.cone_order < 1:
        print("error: the cone order must be at least 1", file=err)
        return EXIT_USAGE
    ev = Evaluator(args.cone_order)
    if args.command == "eval":
        return run_eval(args.expr, ev, out, err)
    if args.command == "check":
        return run_check(args.expr, ev, out, err)
    if args.command == "reduce":
        return run_reduce(args.expr, ev, out, err)
    if args.command == "verify":
        return run_verify(args, out)
    return run_repl(ev, inp or sys.stdin, out, err)


if __name__ == "__main__":
    sys.exit(main())
