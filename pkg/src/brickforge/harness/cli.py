"""Command line interface.

Subcommands: classify (per-graph record), decompose (terminal pieces),
family (emit a named graph), sweep (exhaustive verification). Exit codes
are part of the contract: 0 verified / success, 1 theorem violation,
2 input or usage error, 3 precondition failure (non-brick classify input,
non-matching-covered decompose input).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from ..errors import BrickforgeError, NotMatchingCovered, ParseError
from ..families import FAMILY_NAMES, generate
from ..graphcore import MultiGraph
from ..matching import is_matching_covered
from ..tightcut import tight_cut_decomposition
from .io import emit_edge_list, emit_sparse6, parse_graph
from .report import classify_record, dump_line, format_pretty
from .sweep import run_sweep

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_PRECONDITION = 3


def _read_graph(path: str) -> MultiGraph:
    if path == "-":
        return parse_graph(sys.stdin.read())
    return parse_graph(Path(path))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="brickforge",
        description="matching covered graph analysis: classification, "
        "tight cut decomposition, families, verification sweep",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser("classify", help="emit the record of one graph")
    p_classify.add_argument("input", nargs="?", default="-", help="path or - for stdin")
    p_classify.add_argument("--pretty", action="store_true", help="table instead of JSON")

    p_decompose = sub.add_parser("decompose", help="list the terminal pieces")
    p_decompose.add_argument("input", nargs="?", default="-", help="path or - for stdin")

    p_family = sub.add_parser("family", help="emit a named family member")
    p_family.add_argument("name", choices=FAMILY_NAMES)
    p_family.add_argument("size", nargs="?", type=int, default=None)
    p_family.add_argument("--format", choices=("edges", "s6"), default="edges")

    p_sweep = sub.add_parser("sweep", help="verify all cubic graphs up to an order")
    p_sweep.add_argument("--max-n", type=int, required=True)
    p_sweep.add_argument("--jobs", type=int, default=1)
    p_sweep.add_argument("--seed", type=int, default=0)
    p_sweep.add_argument("--pretty", action="store_true", help="table instead of JSON")
    return parser


def _cmd_classify(args) -> int:
    g = _read_graph(args.input)
    record = classify_record(g)
    if args.pretty:
        sys.stdout.write(format_pretty([record]))
    else:
        print(dump_line(record))
    return EXIT_OK if record["brick"] else EXIT_PRECONDITION


def _cmd_decompose(args) -> int:
    g = _read_graph(args.input)
    if not is_matching_covered(g):
        print("error: input graph is not matching covered", file=sys.stderr)
        return EXIT_PRECONDITION
    result = tight_cut_decomposition(g)
    for i, piece in enumerate(result.pieces, start=1):
        pairs = " ".join(f"{u}-{v}" for u, v in sorted(piece.graph.live_pairs()))
        print(f"piece {i}: {piece.tag} n={piece.graph.n} edges: {pairs}")
    print(f"b={result.b} p={result.p}")
    return EXIT_OK


def _cmd_family(args) -> int:
    g = generate(args.name, args.size)
    if args.format == "s6":
        print(emit_sparse6(g))
    else:
        sys.stdout.write(emit_edge_list(g))
    return EXIT_OK


def _cmd_sweep(args) -> int:
    if args.max_n % 2 or not (4 <= args.max_n <= 14):
        print("error: --max-n must be even with 4 <= max-n <= 14", file=sys.stderr)
        return EXIT_INPUT
    if args.jobs < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    result = run_sweep(max_n=args.max_n, seed=args.seed, jobs=args.jobs)
    if args.pretty:
        sys.stdout.write(format_pretty(result.records))
        for v in result.violations:
            print(f"VIOLATION {v['predicate']} [{v['s6']}]: {v['detail']}")
        s = result.summary
        print(
            f"graphs={s['graph_count']} subjects={s['subject_count']} "
            f"violations={s['violation_count']} ok={s['ok']}"
        )
    else:
        for line in result.lines():
            print(line)
    return EXIT_OK if result.ok else EXIT_VIOLATION


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    handlers = {
        "classify": _cmd_classify,
        "decompose": _cmd_decompose,
        "family": _cmd_family,
        "sweep": _cmd_sweep,
    }
    try:
        return handlers[args.command](args)
    except (ParseError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NotMatchingCovered as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except BrickforgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
