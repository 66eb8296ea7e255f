"""Command-line interface: ``permroots {roots,series,oeis,verify}``.

Exit codes: 0 success, 1 verification counterexample, 2 usage or guard error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from .counting import RootCount, count_roots, has_kth_root
from .cycletype import CycleType, CycleTypeSyntaxError, format_cycle_type, parse_cycle_type, partitions_of
from .oracle import MAX_N, oracle_count_roots
from .sequences import EVEN, ODD, SEQUENCES, bfile, generate_sequence, lookup_sequence, sequence_from_egf, single_length_egf
from .series import build_signed_difference_series, build_total_root_series, egf_coefficient

MAX_WEIGHT = 64
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer: {text!r}")
    return value


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text!r}")
    return value


def _k_list(text: str) -> list[int]:
    return [_positive_int(part.strip()) for part in text.split(",") if part.strip()]


def _default_workers() -> int:
    env = os.environ.get("PERMROOT_WORKERS")
    if env is None:
        return 1
    try:
        return max(1, int(env))
    except ValueError:
        raise UsageError(f"PERMROOT_WORKERS must be an integer, got {env!r}") from None


def root_record(k: int, c: CycleType, rc: RootCount) -> dict:
    """JSON-ready record; counts are decimal strings so no width is lost."""
    return {
        "n": c.n,
        "k": k,
        "total": str(rc.total),
        "even": str(rc.even),
        "odd": str(rc.odd),
        "has_root": rc.total > 0,
    }


def cmd_roots(args, out) -> int:
    try:
        c = parse_cycle_type(args.type)
    except CycleTypeSyntaxError as exc:
        raise UsageError(f"bad cycle type {args.type!r}: {exc}") from None
    rc = count_roots(args.k, c)
    assert (rc.total > 0) == has_kth_root(args.k, c)
    rec = root_record(args.k, c, rc)
    if args.format == "json":
        out.write(json.dumps(rec) + "\n")
    else:
        out.write(f"type      {format_cycle_type(c) or '(empty)'}\n")
        for key in ("n", "k", "total", "even", "odd", "has_root"):
            value = rec[key]
            if isinstance(value, bool):
                value = "yes" if value else "no"
            out.write(f"{key:<9} {value}\n")
    return EXIT_OK


def cmd_series(args, out) -> int:
    if args.max_weight > MAX_WEIGHT:
        raise UsageError(f"--max-weight must be at most {MAX_WEIGHT}")
    build = build_signed_difference_series if args.signed else build_total_root_series
    text = build(args.k, args.max_weight).to_text()
    out.write(text + "\n" if text else "")
    return EXIT_OK


def cmd_oeis(args, out) -> int:
    if args.id is not None:
        try:
            spec = lookup_sequence(args.id)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
        out.write(bfile(generate_sequence(spec, args.terms), spec.offset))
        return EXIT_OK
    if args.k is None or args.parity is None:
        raise UsageError(f"give a sequence id ({', '.join(SEQUENCES)}) or both --k and --parity")
    series = single_length_egf(args.k, args.ell, args.parity, args.terms - 1)
    out.write(bfile(sequence_from_egf(series, args.terms)))
    return EXIT_OK


def _check_one(k: int, c: CycleType, series_total: int, series_diff: int):
    """Return None on three-way agreement, else a counterexample description."""
    oracle = oracle_count_roots(k, c)
    formula = count_roots(k, c)
    if oracle == formula and formula.total == series_total and formula.difference == series_diff:
        return None
    return (
        f"k={k} type={format_cycle_type(c) or '(empty)'}: "
        f"oracle=({oracle.total},{oracle.even},{oracle.odd}) "
        f"counting=({formula.total},{formula.even},{formula.odd}) "
        f"series=(total {series_total}, difference {series_diff})"
    )


def _series_values(k: int, max_n: int, types: Sequence[CycleType]) -> list[tuple[int, int]]:
    total = build_total_root_series(k, max_n)
    diff = build_signed_difference_series(k, max_n)
    out = []
    for c in types:
        t, d = egf_coefficient(total, c), egf_coefficient(diff, c)
        if t.denominator != 1 or d.denominator != 1:
            raise ArithmeticError(f"non-integral EGF coefficient at k={k}, type {c}")
        out.append((int(t), int(d)))
    return out


def run_verify(max_n: int, ks: Sequence[int], workers: int = 1) -> tuple[list[str], str | None]:
    """Three-way check of oracle, closed form and series for every type of size <= max_n.

    Returns the per-(k, n) report lines and the first counterexample, if any.
    """
    types = [c for n in range(max_n + 1) for c in partitions_of(n)]
    tasks = []
    for k in ks:
        for c, (t, d) in zip(types, _series_values(k, max_n, types)):
            tasks.append((k, c, t, d))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_check_one, *zip(*tasks), chunksize=4))
    else:
        results = [_check_one(*task) for task in tasks]

    lines = []
    first_failure = None
    tally: dict[tuple[int, int], list[int]] = {}
    for (k, c, _, _), failure in zip(tasks, results):
        passed, checked = tally.setdefault((k, c.n), [0, 0])
        tally[(k, c.n)] = [passed + (failure is None), checked + 1]
        if failure is not None and first_failure is None:
            first_failure = failure
    for (k, n), (passed, checked) in tally.items():
        lines.append(f"k={k} n={n}: {passed}/{checked} passed")
    total_passed = sum(p for p, _ in tally.values())
    lines.append(f"total: {total_passed}/{len(tasks)} checks passed")
    return lines, first_failure


def cmd_verify(args, out) -> int:
    if args.max_n > MAX_N:
        raise UsageError(f"--max-n must be at most {MAX_N}")
    workers = args.workers if args.workers is not None else _default_workers()
    started = time.perf_counter()
    lines, failure = run_verify(args.max_n, args.k, workers)
    for line in lines:
        out.write(line + "\n")
    if failure is not None:
        out.write(f"counterexample: {failure}\n")
    out.write(f"elapsed: {time.perf_counter() - started:.2f}s\n")
    return EXIT_OK if failure is None else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="permroots", description="Count even, odd and total k-th roots of permutations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", help="root counts for one cycle type")
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--type", required=True, help='cycle type such as "1^2,3^1"')
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("series", help="dump the truncated total or signed root EGF")
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--max-weight", type=_nonneg_int, required=True)
    p.add_argument("--signed", action="store_true", help="even-minus-odd series instead of the total")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("oeis", help="b-file for a supported sequence, or any (k, parity)")
    p.add_argument("id", nargs="?", help=", ".join(SEQUENCES))
    p.add_argument("--terms", type=_positive_int, default=20)
    p.add_argument("--k", type=_positive_int)
    p.add_argument("--ell", type=_positive_int, default=1, help="cycle length (default 1, the identity)")
    p.add_argument("--parity", choices=(EVEN, ODD))
    p.set_defaults(func=cmd_oeis)

    p = sub.add_parser("verify", help="exhaustive oracle vs formula vs series check")
    p.add_argument("--max-n", type=_nonneg_int, required=True)
    p.add_argument("--k", type=_k_list, required=True, help="comma-separated list, e.g. 2,3,4")
    p.add_argument("--workers", type=_positive_int, default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"permroots: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
