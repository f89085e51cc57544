"""Command line front end.

    conjsizes pairs --limit 200 [--bound p]
    conjsizes verify --p 5 [--r R] [--format json]
    conjsizes classes --group G --p 5
    conjsizes lemmas --samples 200 --seed 42

Reports go to stdout (or ``--output``), diagnostics to stderr. Exit status is
0 when every check passes, 1 when a check fails and 2 for invalid input or a
memory-budget refusal.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from . import core
from .construction import (
    FamilyParams,
    InvalidParameters,
    build_G,
    build_L,
    build_P,
    build_Q,
    sophie_germain_pairs,
)
from .verifier import SCHEMA_VERSION, lemma_report, verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--output", "-o", default="-", help="output path, '-' for stdout")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=_positive, default=1)
    common.add_argument("--force", action="store_true", help="ignore the memory budget")

    parser = argparse.ArgumentParser(prog="conjsizes", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    pairs = sub.add_parser("pairs", parents=[common], help="list Sophie Germain pairs (q, 2q+1)")
    pairs.add_argument("--limit", type=int, default=100)
    pairs.add_argument(
        "--bound", choices=["q", "p"], default="q",
        help="apply --limit to the Sophie Germain prime q (default) or to p = 2q+1",
    )

    ver = sub.add_parser("verify", parents=[common], help="verify theorem, corollary and proof steps")
    ver.add_argument("--p", type=int, default=5)
    ver.add_argument("--r", type=int, default=None, help="override the twist exponent")
    ver.add_argument(
        "--samples", type=_positive, default=None,
        help="elements per family reconciled against centralizers (default: all when |H| <= 625, else 16)",
    )
    ver.add_argument("--timing", action="store_true", help="include wallclock in JSON output")

    cls = sub.add_parser("classes", parents=[common], help="class-size table for G, P, Q or L")
    cls.add_argument("--group", choices=["G", "P", "Q", "L"], default="G")
    cls.add_argument("--p", type=int, default=None)
    cls.add_argument("--q", type=int, default=None)
    cls.add_argument("--r", type=int, default=None)

    lem = sub.add_parser("lemmas", parents=[common], help="randomized lemma property runs")
    lem.add_argument("--samples", type=int, default=200)
    return parser


def _emit(text: str, output: str) -> None:
    if output == "-":
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def _dump(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def cmd_pairs(args) -> int:
    pairs = sophie_germain_pairs(args.limit, args.bound)
    if args.format == "json":
        data = {"schema": SCHEMA_VERSION, "limit": args.limit, "bound": args.bound, "pairs": [list(x) for x in pairs]}
        _emit(_dump(data), args.output)
    else:
        _emit("".join(f"{q} {p}\n" for q, p in pairs), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    params = FamilyParams.create(args.p, args.r)
    start = time.perf_counter()
    report = verify(params, samples=args.samples, seed=args.seed, threads=args.threads, force=args.force)
    print(f"verify p={params.p}: {time.perf_counter() - start:.1f}s", file=sys.stderr)
    if args.format == "json":
        _emit(report.to_json(include_timing=args.timing), args.output)
    else:
        _emit(report.to_text(), args.output)
    return EXIT_OK if report.passed else EXIT_FAIL


def _class_group(args):
    if args.group == "Q":
        if args.q is None and args.p is None:
            raise InvalidParameters("classes --group Q needs --q or --p")
        q = args.q if args.q is not None else FamilyParams.create(args.p, args.r).q
        return build_Q(q)
    if args.p is None:
        raise InvalidParameters(f"classes --group {args.group} needs --p")
    params = FamilyParams.create(args.p, args.r)
    builder = {"G": build_G, "P": build_P, "L": build_L}[args.group]
    return builder(params, force=args.force)


def cmd_classes(args) -> int:
    G = _class_group(args)
    sizes = core.class_size_set(G, force=args.force)
    if args.format == "json":
        data = {
            "schema": SCHEMA_VERSION,
            "group": G.label,
            "order": G.order,
            "distinct_sizes": sizes.distinct_sizes,
            "classes": [{"size": s, "count": sizes.multiplicity[s]} for s in sizes.distinct_sizes],
        }
        _emit(_dump(data), args.output)
    else:
        lines = [f"{G.label} order {G.order}", "size count"]
        lines += [f"{s} {sizes.multiplicity[s]}" for s in sizes.distinct_sizes]
        _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def cmd_lemmas(args) -> int:
    report = lemma_report(args.samples, args.seed)
    if args.format == "json":
        _emit(report.to_json(), args.output)
    else:
        _emit(report.to_text(), args.output)
    return EXIT_OK if report.passed else EXIT_FAIL


COMMANDS = {"pairs": cmd_pairs, "verify": cmd_verify, "classes": cmd_classes, "lemmas": cmd_lemmas}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "lemmas" and args.samples < 1:
        parser.error("--samples must be at least 1")
    try:
        return COMMANDS[args.command](args)
    except (InvalidParameters, core.BudgetExceeded) as exc:
        print(f"conjsizes: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
