"""Command-line surface: evaluate, verify, report extrema, scan, export.

    oddsum eval <fn> <n>              one exact value (fn in the dispatch set)
    oddsum verify <id|all> [...]      run theorem checkers, exit 0 iff all pass
    oddsum extremal <m>               extrema of g on the block I_m
    oddsum scan g-below <p/q> <bound> all n <= bound with g(n) < p/q
    oddsum cesaro <f> <n>             weighted mean and its limit
    oddsum table <fns> <from> <to>    bulk rows, one column per function

Every command takes --format plain|json|csv and --decimal N (N
significant digits, round-half-even; exact p/q strings otherwise).
Arguments are decimal or 0b-prefixed binary.  Exit codes: 0 success,
1 verification failure, 2 usage error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction

from . import sums, verify
from .bitcore import (
    ResourceLimitError,
    format_rational,
    hat,
    parse_rational,
    tilde,
)
from .deviations import dev_g, dev_u, dev_v, h_eval
from .extremal import argmax_g, lambda_m, scan_g_below, theta
from .sums import alpha, g_fast, u_fast, v_fast

__all__ = ["main", "parse_nat"]

EVAL_FUNCTIONS = {
    "alpha": alpha,
    "V": v_fast,
    "U": u_fast,
    "G": g_fast,
    "v": dev_v,
    "u": dev_u,
    "g": dev_g,
    "h": h_eval,
    "theta": theta,
    "hat": hat,
    "tilde": tilde,
    "lambda_m": lambda_m,
}

# 12 significant digits of (2/3) ln 2, the one irrational limit on offer
_IRRATIONAL_LIMITS = {"inv1px": "0.462098120373"}


def parse_nat(text: str) -> int:
    """A natural number, written in decimal or with a 0b binary prefix."""
    t = text.strip()
    try:
        value = int(t, 2 if t[:2].lower() == "0b" else 10)
    except ValueError:
        raise ValueError(f"not a natural number: {text!r}") from None
    if value < 0:
        raise ValueError(f"negative argument: {text!r}")
    return value


def _decimal_str(value: Fraction, digits: int) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = ROUND_HALF_EVEN
        result = Decimal(value.numerator) / Decimal(value.denominator)
    return str(result)


def _render(value: Fraction | int, decimal_digits: int | None) -> str:
    if decimal_digits is not None:
        return _decimal_str(Fraction(value), decimal_digits)
    return format_rational(value)


def _csv_writer():
    return csv.writer(sys.stdout, lineterminator="\n")


def _cmd_eval(args) -> int:
    value = EVAL_FUNCTIONS[args.function](args.n)
    rendered = _render(value, args.decimal)
    if args.format == "json":
        print(json.dumps({"function": args.function, "n": args.n, "value": rendered}))
    elif args.format == "csv":
        writer = _csv_writer()
        writer.writerow(["function", "n", "value"])
        writer.writerow([args.function, args.n, rendered])
    else:
        print(rendered)
    return 0


def _cmd_verify(args) -> int:
    if args.theorem != "all" and args.theorem not in verify.THEOREM_IDS:
        raise ValueError(
            f"unknown theorem id {args.theorem!r};"
            f" valid ids: {', '.join(verify.THEOREM_IDS)} or 'all'"
        )
    config = verify.RangeConfig(
        max_n=args.max_n,
        max_m=args.max_m,
        max_r=args.max_r,
        max_p=args.max_p,
        random_big_trials=args.trials,
        random_bits=args.bits,
        seed=args.seed,
    )
    ids = verify.THEOREM_IDS if args.theorem == "all" else (args.theorem,)
    writer = None
    if args.format == "csv":
        writer = _csv_writer()
        writer.writerow(["theorem", "status", "checked", "counterexample"])
    all_pass = True
    for theorem in ids:
        report = verify.check(theorem, config)
        all_pass = all_pass and report.status == "pass"
        if args.format == "json":
            print(json.dumps(report.record()))
        elif args.format == "csv":
            detail = ""
            if report.counterexample is not None:
                ce = report.counterexample
                detail = " ".join(
                    [f"{k}={v}" for k, v in ce.inputs]
                    + [f"expected={ce.expected}", f"actual={ce.actual}"]
                )
            writer.writerow([report.theorem, report.status, report.checked_count, detail])
        else:
            print(report.line())
        sys.stdout.flush()
    return 0 if all_pass else 1


def _cmd_extremal(args) -> int:
    report = argmax_g(args.m)
    min_value = _render(report.min_value, args.decimal)
    max_value = _render(report.max_value, args.decimal)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "m": report.m,
                    "min_value": min_value,
                    "min_points": list(report.min_points),
                    "max_value": max_value,
                    "max_points": list(report.max_points),
                    "degenerate": report.degenerate,
                }
            )
        )
    elif args.format == "csv":
        writer = _csv_writer()
        writer.writerow(
            ["m", "min_value", "min_points", "max_value", "max_points", "degenerate"]
        )
        writer.writerow(
            [
                report.m,
                min_value,
                ";".join(map(str, report.min_points)),
                max_value,
                ";".join(map(str, report.max_points)),
                report.degenerate,
            ]
        )
    else:
        min_at = ",".join(map(str, report.min_points))
        max_at = ",".join(map(str, report.max_points))
        print(f"min {min_value} at {min_at}; max {max_value} at {max_at}")
    return 0


def _cmd_scan(args) -> int:
    matches = scan_g_below(args.threshold, args.bound)
    if args.format == "json":
        print(json.dumps(matches))
    elif args.format == "csv":
        writer = _csv_writer()
        writer.writerow(["n"])
        for n in matches:
            writer.writerow([n])
    else:
        print(" ".join(map(str, matches)))
    return 0


def _cmd_cesaro(args) -> int:
    mean = sums.cesaro_mean(args.function, args.n)
    exact_limit = sums.cesaro_limit(args.function)
    if exact_limit is not None:
        limit = _render(exact_limit, args.decimal)
    else:
        limit = _IRRATIONAL_LIMITS[args.function]
    rendered = _render(mean, args.decimal)
    if args.format == "json":
        print(
            json.dumps(
                {"function": args.function, "n": args.n, "mean": rendered, "limit": limit}
            )
        )
    elif args.format == "csv":
        writer = _csv_writer()
        writer.writerow(["function", "n", "mean", "limit"])
        writer.writerow([args.function, args.n, rendered, limit])
    else:
        print(f"mean {rendered} limit {limit}")
    return 0


def _cmd_table(args) -> int:
    names = [name.strip() for name in args.functions.split(",")]
    for name in names:
        if name not in EVAL_FUNCTIONS:
            raise ValueError(
                f"unknown function {name!r}; valid: {', '.join(EVAL_FUNCTIONS)}"
            )
    if args.start > args.stop:
        raise ValueError(f"inverted range: {args.start} > {args.stop}")
    if args.stop - args.start > sums.DEFAULT_BRUTE_CAP:
        raise ResourceLimitError(
            f"range of {args.stop - args.start + 1} rows exceeds the scan cap"
            f" {sums.DEFAULT_BRUTE_CAP}"
        )
    rows = (
        (n, [_render(EVAL_FUNCTIONS[name](n), args.decimal) for name in names])
        for n in range(args.start, args.stop + 1)
    )
    if args.format == "json":
        records = [{"n": n} | dict(zip(names, values)) for n, values in rows]
        print(json.dumps(records))
    elif args.format == "csv":
        writer = _csv_writer()
        writer.writerow(["n"] + names)
        for n, values in rows:
            writer.writerow([n] + values)
    else:
        for n, values in rows:
            print(" ".join([str(n)] + values))
    return 0


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument(
        "--format", choices=("plain", "json", "csv"), default="plain",
        help="output format (default plain)",
    )
    shared.add_argument(
        "--decimal", type=int, default=None, metavar="N",
        help="render rationals with N significant digits instead of p/q",
    )

    parser = argparse.ArgumentParser(
        prog="oddsum",
        description="Exact partial sums of the largest-odd-divisor function"
        " and their sharp-bound verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", parents=[shared], help="evaluate one function")
    p_eval.add_argument("function", choices=tuple(EVAL_FUNCTIONS))
    p_eval.add_argument("n", type=parse_nat)
    p_eval.set_defaults(handler=_cmd_eval)

    p_verify = sub.add_parser("verify", parents=[shared], help="run theorem checkers")
    p_verify.add_argument("theorem", help="a theorem id or 'all'")
    p_verify.add_argument("--max-n", type=parse_nat, default=verify.RangeConfig.max_n)
    p_verify.add_argument("--max-m", type=parse_nat, default=verify.RangeConfig.max_m)
    p_verify.add_argument("--max-r", type=parse_nat, default=verify.RangeConfig.max_r)
    p_verify.add_argument("--max-p", type=parse_nat, default=verify.RangeConfig.max_p)
    p_verify.add_argument(
        "--trials", type=parse_nat, default=verify.RangeConfig.random_big_trials
    )
    p_verify.add_argument(
        "--bits", type=parse_nat, default=verify.RangeConfig.random_bits
    )
    p_verify.add_argument("--seed", type=int, default=verify.RangeConfig.seed)
    p_verify.set_defaults(handler=_cmd_verify)

    p_extremal = sub.add_parser(
        "extremal", parents=[shared], help="extrema of g on a block I_m"
    )
    p_extremal.add_argument("m", type=parse_nat)
    p_extremal.set_defaults(handler=_cmd_extremal)

    p_scan = sub.add_parser("scan", parents=[shared], help="threshold scans")
    p_scan.add_argument("predicate", choices=("g-below",))
    p_scan.add_argument("threshold", type=parse_rational)
    p_scan.add_argument("bound", type=parse_nat)
    p_scan.set_defaults(handler=_cmd_scan)

    p_cesaro = sub.add_parser(
        "cesaro", parents=[shared], help="weighted mean against its limit"
    )
    p_cesaro.add_argument("function", choices=sums.CESARO_FUNCTIONS)
    p_cesaro.add_argument("n", type=parse_nat)
    p_cesaro.set_defaults(handler=_cmd_cesaro)

    p_table = sub.add_parser("table", parents=[shared], help="bulk value export")
    p_table.add_argument("functions", help="comma-separated function names")
    p_table.add_argument("start", type=parse_nat, metavar="from")
    p_table.add_argument("stop", type=parse_nat, metavar="to")
    p_table.set_defaults(handler=_cmd_table)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.handler(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:  # DomainError is a ValueError: usage errors
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
