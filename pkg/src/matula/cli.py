"""Command-line front end.

Subcommands: decode, encode, stat, table, verify, selftest.  Exit codes:
0 success, 1 computation error, 2 usage error, 3 verification mismatch.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import oracle, stats, tree
from .errors import MatulaError, ParseError
from .stats import StatName

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_MISMATCH = 3


@dataclass
class BFile:
    """Parsed OEIS-style b-file: ascending (index, value) pairs."""

    entries: list[tuple[int, int]]


def parse_bfile(text: str) -> BFile:
    """Parse "index value" lines; '#' comments and blank lines are skipped."""
    entries: list[tuple[int, int]] = []
    offset = 0
    last_index: int | None = None
    for line in text.splitlines(keepends=True):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            parts = stripped.split()
            if len(parts) != 2:
                raise ParseError(
                    f"expected 'index value', got {stripped!r}", offset
                )
            try:
                index, value = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError(
                    f"non-integer token in line {stripped!r}", offset
                ) from None
            if last_index is not None and index <= last_index:
                raise ParseError(
                    f"indices must be strictly increasing ({index} after {last_index})",
                    offset,
                )
            last_index = index
            entries.append((index, value))
        offset += len(line.encode("utf-8"))
    return BFile(entries)


def _stat_name(raw: str) -> StatName:
    try:
        return StatName.from_string(raw)
    except MatulaError:
        raise argparse.ArgumentTypeError(f"unknown statistic name {raw!r}") from None


def _alpha(raw: str) -> Fraction:
    try:
        return Fraction(raw)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"cannot parse alpha {raw!r}") from None


def _int_arg(raw: str) -> int:
    try:
        return int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matula",
        description="Matula numbers: decode/encode rooted trees and compute tree statistics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decode", help="print the rooted tree for a Matula number")
    p.add_argument("n", type=_int_arg)
    p.add_argument("--format", choices=("paren", "json", "dot"), default="paren")

    p = sub.add_parser("encode", help="print the Matula number of a parenthesized tree")
    p.add_argument("tree", help='canonical form, e.g. "(()())"')

    p = sub.add_parser("stat", help="print one statistic of one Matula number")
    p.add_argument("name", type=_stat_name)
    p.add_argument("n", type=_int_arg)
    p.add_argument("--alpha", type=_alpha, default=None)
    p.add_argument("--k", type=int, default=None)

    p = sub.add_parser("table", help="print 'n value' lines for a range of n")
    p.add_argument("name", type=_stat_name)
    p.add_argument("lo", type=_int_arg)
    p.add_argument("hi", type=_int_arg)
    p.add_argument("--bfile", action="store_true", help="integer-only b-file output")
    p.add_argument("--alpha", type=_alpha, default=None)

    p = sub.add_parser("verify", help="check computed values against an OEIS b-file")
    p.add_argument("name", type=_stat_name)
    p.add_argument("bfile_path")
    p.add_argument("--limit", type=int, default=None, help="check at most K entries")

    p = sub.add_parser("selftest", help="recursion-vs-oracle and split-invariance checks")
    p.add_argument("--max-n", type=int, default=300)
    p.add_argument("--seed", type=int, default=0)

    return parser


def _render(value) -> str:
    return str(value)


def _cmd_decode(args) -> int:
    t = tree.decode(args.n)
    if args.format == "paren":
        print(tree.to_canonical_string(t))
    elif args.format == "json":
        print(tree.to_json(t, indent=2))
    else:
        print(tree.to_dot(t))
    return EXIT_OK


def _cmd_encode(args) -> int:
    t = tree.parse_canonical_string(args.tree.strip())
    print(tree.encode(t))
    return EXIT_OK


def _cmd_stat(args) -> int:
    engine = stats.default_engine()
    value = engine.compute(args.name, args.n, alpha=args.alpha, k=args.k)
    print(_render(value))
    return EXIT_OK


def _cmd_table(args) -> int:
    engine = stats.default_engine()
    for n in range(args.lo, args.hi + 1):
        value = engine.compute(args.name, n, alpha=args.alpha)
        if args.bfile and not isinstance(value, int):
            raise MatulaError(
                f"--bfile needs an integer-valued statistic, {args.name.value} gave {value!r}"
            )
        print(f"{n} {_render(value)}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    with open(args.bfile_path, "rb") as fh:
        bfile = parse_bfile(fh.read().decode("utf-8"))
    entries = bfile.entries
    if args.limit is not None:
        entries = entries[: args.limit]
    engine = stats.default_engine()
    for index, expected in entries:
        got = engine.compute(args.name, index)
        if got != expected:
            print(
                f"mismatch at index {index}: computed {_render(got)}, "
                f"b-file has {expected}"
            )
            return EXIT_MISMATCH
    print(f"verified {len(entries)} terms of {args.name.value}: 0 mismatches")
    return EXIT_OK


def _cmd_selftest(args) -> int:
    engine = stats.StatsEngine()
    failures: list[str] = []
    for n in range(1, args.max_n + 1):
        failures.extend(oracle.compare_all(n, engine))
    print(f"recursion vs oracle: n = 1..{args.max_n}, {len(failures)} mismatches")

    split_failures = 0
    composites = 0
    for n in range(4, args.max_n + 1):
        if engine._omega(n) >= 2:
            composites += 1
            if not oracle.random_split_check(n, args.seed + n, engine):
                split_failures += 1
                failures.append(f"n={n}: random split disagreed")
    print(f"random split checks: {composites} composites, {split_failures} failures")

    if failures:
        for line in failures[:20]:
            print(f"FAIL {line}")
        return EXIT_ERROR
    print("selftest OK")
    return EXIT_OK


_COMMANDS = {
    "decode": _cmd_decode,
    "encode": _cmd_encode,
    "stat": _cmd_stat,
    "table": _cmd_table,
    "verify": _cmd_verify,
    "selftest": _cmd_selftest,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except MatulaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
