"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Callable, Iterator, TextIO

from ipstree import counting, oracle
from ipstree.core import PartitionSpec
from ipstree.enumeration import enumerate_all, enumerate_partitions, visit_prefixes

FORMATS = ("text", "json", "csv")
ENUMERATION_CHECK_MAX_N = oracle.BRUTE_FORCE_MAX_N


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {value}")
    return value


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected an integer >= 0, got {value}")
    return value


def _emit(out: TextIO, fmt: str, text: str, record: dict, csv_fields: list) -> None:
    if fmt == "json":
        out.write(json.dumps(record, separators=(",", ":")) + "\n")
    elif fmt == "csv":
        out.write(",".join("" if f is None else str(f) for f in csv_fields) + "\n")
    else:
        out.write(text + "\n")


def cmd_count(args: argparse.Namespace, out: TextIO) -> int:
    n, m = args.n, args.m
    value = counting.count_pn(n) if m is None else counting.count_pnm(n, m)
    _emit(out, args.format, str(value), {"n": n, "m": m, "count": value}, [n, m, value])
    return 0


def cmd_enumerate(args: argparse.Namespace, out: TextIO) -> int:
    n = args.n
    if args.m is None:
        rows: Iterator = enumerate_all(n)
    else:
        rows = ((args.m, row) for row in enumerate_partitions(PartitionSpec(n, args.m)))
    for i, (m, parts) in enumerate(rows):
        if args.limit is not None and i >= args.limit:
            break
        joined = " ".join(map(str, parts))
        _emit(out, args.format, joined, {"n": n, "m": m, "parts": list(parts)}, [n, m, joined])
    return 0


def cmd_table(args: argparse.Namespace, out: TextIO) -> int:
    for n in range(1, args.n_max + 1):
        row = [counting.count_pnm(n, m) for m in range(1, n + 1)]
        total = sum(row)
        joined = " ".join(map(str, row))
        _emit(
            out,
            args.format,
            f"{joined} | {total}",
            {"n": n, "counts": row, "total": total},
            [n, joined, total],
        )
    return 0


def _check_counts(n_max: int) -> tuple[int, int] | None:
    for n in range(1, n_max + 1):
        for m in range(1, n + 1):
            if counting.count_pnm(n, m) != oracle.dp_count(n, m):
                return n, m
    return None


def _check_totals(n_max: int) -> tuple[int, int] | None:
    for n in range(1, n_max + 1):
        if counting.count_pn(n) != oracle.dp_total(n):
            return n, 0
    return None


def _check_enumeration(n_max: int) -> tuple[int, int] | None:
    for n in range(1, n_max + 1):
        for m in range(1, n + 1):
            rows = list(enumerate_partitions(PartitionSpec(n, m)))
            if len(rows) != counting.count_pnm(n, m) or set(rows) != oracle.brute_enumerate(n, m):
                return n, m
    return None


def _check_nodes(n_max: int) -> tuple[int, int] | None:
    for n in range(1, n_max + 1):
        for m in range(1, n + 1):
            spec = PartitionSpec(n, m)
            if not spec.has_tree:
                continue
            for level in range(1, spec.top_level + 1):
                if counting.node_count(spec, level) != visit_prefixes(spec, level):
                    return n, m
            if counting.node_count(spec, 1).count != counting.count_pnm(n, m):
                return n, m
    return None


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    n_max = args.n_max
    small = min(n_max, ENUMERATION_CHECK_MAX_N)
    checks: list[tuple[str, int, Callable[[int], tuple[int, int] | None]]] = [
        ("counts-vs-dp", n_max, _check_counts),
        ("totals-vs-dp", n_max, _check_totals),
        ("enumeration-vs-brute-force", small, _check_enumeration),
        ("node-counts-vs-prefix-visits", small, _check_nodes),
    ]
    status = 0
    for name, limit, check in checks:
        failure = check(limit)
        if failure is None:
            out.write(f"PASS {name} (n <= {limit})\n")
        else:
            n, m = failure
            where = f"n={n}" if m == 0 else f"n={n}, m={m}"
            out.write(f"FAIL {name}: first mismatch at {where}\n")
            status = 1
    return status


def _time_ns(fn: Callable[[], int]) -> tuple[int, int]:
    start = time.perf_counter_ns()
    value = fn()
    return value, time.perf_counter_ns() - start


def cmd_bench(args: argparse.Namespace, out: TextIO) -> int:
    sep = "," if args.format == "csv" else " "
    if args.format != "json":
        out.write(sep.join(("n", "p_n", "tree_ns", "dp_ns")) + "\n")
    for n in range(1, args.n_max + 1):
        p_tree, tree_ns = _time_ns(lambda: counting.count_pn(n))
        oracle._table.cache_clear()
        p_dp, dp_ns = _time_ns(lambda: sum(oracle.dp_table(n)[n]))
        if p_tree != p_dp:
            print(f"tree and dp disagree at n={n}: {p_tree} != {p_dp}", file=sys.stderr)
            return 1
        fields = [n, p_tree, tree_ns, dp_ns]
        _emit(out, args.format, sep.join(map(str, fields)),
              {"n": n, "p_n": p_tree, "tree_ns": tree_ns, "dp_ns": dp_ns}, fields)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ipstree",
        description="Count and enumerate integer partitions by walking the IPS tree of j-values.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("--format", choices=FORMATS, default="text")
        return p

    p = add("count", "print p(n, m), or p(n) when --m is omitted")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--m", type=_positive)
    p.set_defaults(func=cmd_count)

    p = add("enumerate", "print partitions of n, one per line")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--m", type=_positive)
    p.add_argument("--limit", type=_nonnegative, help="stop after this many rows")
    p.set_defaults(func=cmd_enumerate)

    p = add("table", "print the p(n, m) triangle with row sums")
    p.add_argument("--n-max", type=_positive, required=True)
    p.set_defaults(func=cmd_table)

    p = add("verify", "check tree counts and rows against the independent oracles")
    p.add_argument("--n-max", type=_positive, required=True)
    p.set_defaults(func=cmd_verify)

    p = add("bench", "time the tree count against the dp table for n = 1..n-max")
    p.add_argument("--n-max", type=_positive, required=True)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "m", None) is not None and args.m > args.n:
        parser.error(f"--m must be <= --n, got m={args.m}, n={args.n}")
    try:
        return args.func(args, out if out is not None else sys.stdout)
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
