"""Command-line interface.

Standard output carries machine-parseable CSV (or a bare boolean) only;
diagnostics and --trace output go to standard error.  Exit codes: 0 success,
1 domain error (bad grammar, infeasible array, out-of-range length),
2 usage error.
"""

from __future__ import annotations

import argparse
import sys

from . import bench as bench_mod
from .covers import cover_array, cover_array_trace, covers_of_prefix
from .prefix import (
    prefix_table_indet,
    prefix_table_regular,
    require_feasible,
)
from .rooted import rooted_covers, rooted_covers_trace, sliding_cover_check
from .strings import parse_indeterminate, parse_regular


def _csv(values) -> str:
    return ",".join(str(v) for v in values)


def _parse_pi(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",")]
    except ValueError:
        raise ValueError(f"bad integer array: {text!r}") from None
    require_feasible(values)
    return values


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="picover",
        description="Cover structures of regular and indeterminate strings "
        "computed from prefix tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("prefix", help="print the prefix table of a string")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--string", help="regular string, plain letters")
    src.add_argument("--indet", help="indeterminate string, [ab] for sets")

    p = sub.add_parser("covers", help="print the cover array of a regular string")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--string", "--regular", dest="string", help="regular string")
    src.add_argument("--from-pi", help="comma-separated prefix table")
    p.add_argument("--trace", action="store_true", help="per-range state on stderr")
    p.add_argument(
        "--at", type=int, metavar="I", help="also list all covers of the I-prefix"
    )

    p = sub.add_parser("rooted", help="print all rooted cover lengths")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--string", "--indet", dest="string", help="indeterminate string")
    src.add_argument("--from-pi", help="comma-separated prefix table")
    p.add_argument("--trace", action="store_true", help="per-position state on stderr")

    p = sub.add_parser("sliding", help="test for a sliding cover of length K")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--string", "--indet", dest="string", help="indeterminate string")
    p.add_argument("--k", type=int, required=True, metavar="K", help="cover length")

    p = sub.add_parser("validate", help="check that an array is feasible")
    p.add_argument("--from-pi", required=True, help="comma-separated integer array")

    p = sub.add_parser("bench", help="inner-loop counts over random feasible arrays")
    p.add_argument("--lengths", required=True, help="comma-separated lengths")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="output CSV path (default: stdout)")
    p.add_argument(
        "--unary",
        action="store_true",
        help="use the worst-case table [n,n-1,...,1] instead of random arrays",
    )
    p.add_argument(
        "--distribution",
        choices=("geometric", "uniform"),
        default="geometric",
        help="entry distribution for the random arrays",
    )
    return parser


def _cmd_prefix(args) -> int:
    if args.string is not None:
        pi = prefix_table_regular(parse_regular(args.string))
    else:
        pi = prefix_table_indet(parse_indeterminate(args.indet))
    print(_csv(pi))
    return 0


def _cmd_covers(args) -> int:
    if args.string is not None:
        pi = prefix_table_regular(parse_regular(args.string))
    else:
        pi = _parse_pi(args.from_pi)
    if args.trace:
        for snap in cover_array_trace(pi):
            print(
                f"range {snap.start}..{snap.end} "
                f"maxlive={_csv(snap.maxlive)} gamma={_csv(snap.cover_array)}",
                file=sys.stderr,
            )
    gamma = cover_array(pi)
    print(_csv(gamma))
    if args.at is not None:
        print(_csv(covers_of_prefix(gamma, args.at)))
    return 0


def _cmd_rooted(args) -> int:
    if args.string is not None:
        pi = prefix_table_indet(parse_indeterminate(args.string))
    else:
        pi = _parse_pi(args.from_pi)
    if args.trace:
        for row in rooted_covers_trace(pi):
            print(
                f"i={row.position} maxlive={_csv(row.maxlive)} "
                f"L={_csv(row.candidates)}",
                file=sys.stderr,
            )
    print(_csv(rooted_covers(pi)))
    return 0


def _cmd_sliding(args) -> int:
    x = parse_indeterminate(args.string)
    print("true" if sliding_cover_check(x, args.k) else "false")
    return 0


def _cmd_validate(args) -> int:
    _parse_pi(args.from_pi)
    print("true")
    return 0


def _cmd_bench(args) -> int:
    lengths = tuple(int(part) for part in args.lengths.split(","))
    cfg = bench_mod.BenchConfig(
        lengths=lengths,
        trials=args.trials,
        seed=args.seed,
        unary=args.unary,
        distribution=args.distribution,
    )
    report = bench_mod.run_benchmark(cfg)
    bench_mod.emit_csv(report, args.out)
    return 0


_COMMANDS = {
    "prefix": _cmd_prefix,
    "covers": _cmd_covers,
    "rooted": _cmd_rooted,
    "sliding": _cmd_sliding,
    "validate": _cmd_validate,
    "bench": _cmd_bench,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, OSError) as exc:
        print(str(exc), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
