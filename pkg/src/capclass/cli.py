"""Command-line interface.

Subcommands:
    classify    run the full classification and write a catalog file
    canon       canonical key and stabilizer order of a cap
    stab        stabilizer order of a cap
    candidates  extension candidates of a cap
    verify      check a catalog against a fixture file
    table1      class counts per size from a catalog file
    oracle      brute-force cross-check of the engine (small dimensions)

Exit status: 0 on success, 1 on verification failure, 2 on usage or input
errors.  Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from typing import Optional

from . import catalog as cat
from . import classifier, oracle
from .canonical import NotSpanning, canonical, stabilizer_order
from .geometry import (DimensionMismatch, NotACap, ZeroVector, candidate_set,
                       format_points, parse_points, space)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


def _resolve_threads(flag: Optional[int]) -> int:
    if flag is not None:
        return flag
    env = os.environ.get("CAPCLASS_THREADS")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"CAPCLASS_THREADS={env!r} is not an integer")
    return os.cpu_count() or 1


def _parse_cap(args) -> tuple:
    sp = space(args.dim)
    return sp, parse_points(sp, args.points)


def cmd_classify(args) -> int:
    threads = _resolve_threads(args.threads)
    if threads < 1:
        raise ValueError("threads must be positive")
    t0 = time.time()

    def progress(size, count):
        print(f"size {size}: {count} classes "
              f"[{time.time() - t0:.1f}s]", file=sys.stderr)

    levels = classifier.classify(args.dim, threads=threads,
                                 ordering_prune=args.ordering_prune,
                                 progress=progress)
    catalog = cat.catalog_from_levels(args.dim, levels)
    text = cat.serialize(catalog)
    with open(args.out, "w", encoding="ascii", newline="\n") as fh:
        fh.write(text)
    print(cat.format_table1(cat.table1(catalog)), end="")
    print(f"catalog written to {args.out} "
          f"({len(catalog.entries)} classes, {time.time() - t0:.1f}s, "
          f"{threads} worker{'s' if threads != 1 else ''})", file=sys.stderr)
    return EXIT_OK


def cmd_canon(args) -> int:
    sp, mask = _parse_cap(args)
    record = canonical(sp, mask)
    print(f"key={format_points(record.key)} stab={record.stabilizer_order}")
    return EXIT_OK


def cmd_stab(args) -> int:
    sp, mask = _parse_cap(args)
    print(stabilizer_order(sp, mask))
    return EXIT_OK


def cmd_candidates(args) -> int:
    sp, mask = _parse_cap(args)
    print(format_points(candidate_set(sp, mask)))
    return EXIT_OK


def cmd_verify(args) -> int:
    with open(args.catalog, encoding="ascii") as fh:
        catalog = cat.parse(fh.read())
    with open(args.fixtures, encoding="ascii") as fh:
        fixtures = cat.parse_fixtures(space(catalog.d), fh.read())
    results = cat.verify_fixtures(catalog, fixtures)
    print(cat.format_report(results), end="")
    return EXIT_OK if cat.report_ok(results) else EXIT_VERIFY_FAILED


def cmd_table1(args) -> int:
    with open(args.catalog, encoding="ascii") as fh:
        catalog = cat.parse(fh.read())
    print(cat.format_table1(cat.table1(catalog)), end="")
    return EXIT_OK


def cmd_oracle(args) -> int:
    t0 = time.time()
    levels = classifier.classify(args.dim, threads=1)
    oracle_classes = oracle.classify_bruteforce(args.dim)
    ok, lines = oracle.compare_with_engine(args.dim, levels, oracle_classes)
    for line in lines:
        print(line)
    print(f"{'IDENTICAL' if ok else 'DIFFERENT'} "
          f"({time.time() - t0:.1f}s)", file=sys.stderr)
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="capclass",
        description="Isomorph-free classification of caps in PG(d,2)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify all caps of PG(d,2)")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--ordering-prune", action="store_true",
                   help="group candidates by stabilizer orbits before "
                        "computing canonical forms (same output, less work)")
    p.set_defaults(func=cmd_classify)

    for name, func, hint in [
            ("canon", cmd_canon, "canonical key and stabilizer order"),
            ("stab", cmd_stab, "stabilizer order"),
            ("candidates", cmd_candidates, "extension candidates")]:
        p = sub.add_parser(name, help=f"{hint} of a cap")
        p.add_argument("--dim", type=int, required=True)
        p.add_argument("--points", required=True,
                       help="comma-separated point indices")
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="check a catalog against fixtures")
    p.add_argument("--catalog", required=True)
    p.add_argument("--fixtures", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table1", help="class counts per size from a catalog")
    p.add_argument("--catalog", required=True)
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("oracle", help="diff the engine against brute force")
    p.add_argument("--dim", type=int, default=3)
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (NotACap, NotSpanning, ZeroVector, DimensionMismatch,
            cat.ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
