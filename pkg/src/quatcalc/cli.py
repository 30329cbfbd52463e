"""Command-line front end: ``quatcalc diff | integrate | verify``.

Data goes to standard output as compact JSON, diagnostics to standard error.
Exit codes: 0 success, 1 domain or verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path as FsPath

from . import analytic, integral, verify
from .differential import differential
from .errors import QuatCalcError
from .quaternion import ONE, Quaternion

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), allow_nan=False)


def _quaternion_arg(text: str) -> Quaternion:
    try:
        value = json.loads(text)
    except json.JSONDecodeError:
        raise UsageError(f"expected a JSON 4-array, got {text!r}") from None
    if (not isinstance(value, list) or len(value) != 4
            or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value)):
        raise UsageError(f"expected a JSON 4-array of numbers, got {text!r}")
    return Quaternion.from_seq(value)


def _function_arg(text: str) -> analytic.AnalyticFunction:
    try:
        return analytic.parse_spec(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_diff(args) -> int:
    f = _function_arg(args.function)
    x = _quaternion_arg(args.point)
    delta = _quaternion_arg(args.delta)
    res = differential(f, x, delta, order=args.order)
    print(dumps({"value": res.value.to_list(),
                 "parallel": res.split.parallel.to_list(),
                 "perp": res.split.perp.to_list()}))
    return EXIT_OK


def _load_path(filename: str) -> integral.Path:
    try:
        return integral.Path.load(filename)
    except (OSError, json.JSONDecodeError, ValueError, TypeError) as exc:
        raise UsageError(f"bad path file {filename!r}: {exc}") from None


def cmd_integrate(args) -> int:
    path = _load_path(args.path)
    if args.function is not None:
        f = _function_arg(args.function)
    else:
        f = analytic.power(args.power)
    if args.mode == "dcal":
        value = integral.line_integral_D(f, path)
        exact = integral.endpoint_difference(f, path)
    else:
        if f.kind != "pow" or f.n < 0 or f.scale != ONE:
            raise UsageError("symmetric mode needs --power n or --function pow:n with n >= 0")
        value = integral.symmetric_integral(f.n, path)
        exact = integral.symmetric_closed_form(f.n, path)
    print(dumps({"value": value.to_list(),
                 "endpoint_difference": exact.to_list(),
                 "abs_error": (value - exact).norm()}))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite not in verify.SUITE_NAMES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(verify.SUITE_NAMES)}")
    if args.cases is not None and args.cases < 1:
        raise UsageError("--cases must be positive")
    report = verify.run_suite(args.suite, args.seed, args.cases)
    text = dumps(report.to_json())
    if args.json:
        FsPath(args.json).write_text(text + "\n")
    print(text)
    for c in sorted(report.cases, key=lambda c: c.name):
        if c.status == "fail":
            print(f"FAIL {c.name}: {dumps(c.to_json()['measured'])}", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quatcalc",
                                     description="Quaternion differential and integral calculus.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("diff", help="first- or second-order differential of F at x along delta")
    p.add_argument("--function", required=True, help="exp|sin|cos|log|recip|pow:<n>|poly:[...]")
    p.add_argument("--point", required=True, help="base point as a JSON 4-array")
    p.add_argument("--delta", required=True, help="displacement as a JSON 4-array")
    p.add_argument("--order", type=int, choices=(1, 2), default=1)
    p.set_defaults(handler=cmd_diff)

    p = sub.add_parser("integrate", help="line integral along a polyline path")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--function", help="function spec (see diff)")
    src.add_argument("--power", type=int, help="shorthand for --function pow:<n>")
    p.add_argument("--mode", choices=("dcal", "symmetric"), default="dcal")
    p.add_argument("--path", required=True, help="path JSON file")
    p.set_defaults(handler=cmd_integrate)

    p = sub.add_parser("verify", help="run a seeded verification suite")
    p.add_argument("--suite", required=True, help=", ".join(verify.SUITE_NAMES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=None, help="override random cases per check")
    p.add_argument("--json", default=None, help="also write the report to this file")
    p.set_defaults(handler=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"quatcalc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (QuatCalcError, ArithmeticError, ValueError) as exc:
        print(f"quatcalc: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
