"""Command-line interface.

Exit codes: 0 success, 2 argument/parse error, 3 verification mismatch
(a bug signal, never expected), 4 graph too large for the oracle.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .bipartite import GraphError
from .constructions import mersenne_forest
from .gadgets import family_to_json_dict, gadget_to_json_dict
from .oracle import OracleCapError, count_is, count_mis
from .search import SEARCH_VERTEX_GUARD, enumerate_marked_gadgets, find_covering_families
from .serialize import parse_graph, to_dimacs, to_json
from .synthesizer import (BinaryPattern, realization_size, realize, realize_pattern,
                          vertex_report)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_MISMATCH = 3
EXIT_CAP = 4


def _parse_target(text: str) -> int:
    if text.startswith(("0b", "0B")):
        n = int(text[2:], 2)
    else:
        n = int(text, 10)
    if n < 1:
        raise ValueError("target must be at least 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="misynth",
        description="Construct bipartite graphs with a prescribed number of "
                    "maximal independent sets.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("realize", help="build a graph with the given MIS count")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", help="target count, decimal or 0b-prefixed binary")
    group.add_argument("--pattern", help="periodic pattern, e.g. '101^3,01^5'")
    p.add_argument("--format", choices=("json", "dimacs"), default="json")
    p.add_argument("--out", help="write the graph here instead of stdout")
    p.add_argument("--verify", action="store_true",
                   help="recount with the brute-force oracle")
    p.add_argument("--force-ledger-only", action="store_true",
                   help="with --verify: accept the ledger when the oracle caps out")
    p.add_argument("--report", action="store_true", help="print the vertex report")

    p = sub.add_parser("verify", help="count maximal independent sets of a graph file")
    p.add_argument("graph_file")
    p.add_argument("--count-is", action="store_true",
                   help="also count all independent sets")

    p = sub.add_parser("search-gadgets", help="exhaustively enumerate marked gadgets")
    p.add_argument("--max-vertices", type=int, required=True)
    p.add_argument("--max-part", type=int, default=None)
    p.add_argument("--emit-families", action="store_true",
                   help="assemble covering families from the enumerated pool")

    p = sub.add_parser("mersenne", help="forest with 2^(2^t)-1 independent sets")
    p.add_argument("--t", type=int, required=True)

    # ledger-only range sweeps, used by the acceptance harness
    p = sub.add_parser("batch")
    p.add_argument("--start", type=int, required=True)
    p.add_argument("--stop", type=int, required=True)

    return parser


def _emit_graph(g, fmt, out):
    text = to_json(g) + "\n" if fmt == "json" else to_dimacs(g)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_realize(args) -> int:
    try:
        if args.n is not None:
            result = realize(_parse_target(args.n))
        else:
            result = realize_pattern(BinaryPattern.parse(args.pattern))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    _emit_graph(result.graph, args.format, args.out)
    if args.verify:
        try:
            counted = count_mis(result.graph)
        except OracleCapError as exc:
            if args.force_ledger_only:
                print(f"ledger-only: {result.target}")
                counted = None
            else:
                print(f"error: {exc}", file=sys.stderr)
                return EXIT_CAP
        if counted is not None:
            if counted != result.target:
                print(f"MISMATCH: oracle {counted} != target {result.target}",
                      file=sys.stderr)
                return EXIT_MISMATCH
            print(f"verified: {counted}")
    if args.report:
        for key, value in vertex_report(result).items():
            print(f"{key}: {value}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    try:
        with open(args.graph_file) as fh:
            g = parse_graph(fh.read())
    except (OSError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        print(f"mis: {count_mis(g)}")
        if args.count_is:
            print(f"is: {count_is(g)}")
    except OracleCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    return EXIT_OK


def _cmd_search(args) -> int:
    if not 1 <= args.max_vertices <= SEARCH_VERTEX_GUARD:
        print(f"error: --max-vertices must be in [1, {SEARCH_VERTEX_GUARD}]",
              file=sys.stderr)
        return EXIT_PARSE
    pool = []
    for gadget in enumerate_marked_gadgets(args.max_vertices, args.max_part):
        print(json.dumps(gadget_to_json_dict(gadget), separators=(",", ":")))
        if args.emit_families:
            pool.append(gadget)
    if args.emit_families:
        for family in find_covering_families(pool, n0_max=1000):
            print(json.dumps(family_to_json_dict(family), separators=(",", ":")))
    return EXIT_OK


def _cmd_mersenne(args) -> int:
    if args.t < 1:
        print("error: --t must be at least 1", file=sys.stderr)
        return EXIT_PARSE
    g = mersenne_forest(args.t)
    print(to_json(g))
    print(f"is: {(1 << (1 << args.t)) - 1}")
    return EXIT_OK


def _cmd_batch(args) -> int:
    if not 1 <= args.start <= args.stop:
        print("error: need 1 <= start <= stop", file=sys.stderr)
        return EXIT_PARSE
    for n in range(args.start, args.stop + 1):
        print(f"{n} {realization_size(n)}")
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"realize": _cmd_realize, "verify": _cmd_verify,
               "search-gadgets": _cmd_search, "mersenne": _cmd_mersenne,
               "batch": _cmd_batch}[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())
