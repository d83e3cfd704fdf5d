"""``dartdig`` command line.

Exit codes: 0 success / property true, 1 property false or verification
failures, 2 usage, parse, size-limit or hypothesis errors.
"""

from __future__ import annotations

import argparse
import os
import sys

from .analysis import is_bipartite_digraph, is_strongly_connected
from .constructions import build_dart_digraph, materialize_a2d, squared_dart_digraph, to_dot, to_json
from .generators import named
from .graph import Graph, GraphError, parse_edge_list
from .harness import exhaustive_corpus, random_corpus, run_verify
from .walks import InternalInconsistencyError, a2d_witness_walk, d_witness_walk, walk_to_json

DEFAULT_CAP = 250_000


def _default_cap() -> int:
    raw = os.environ.get("DARTDIG_CAP")
    if raw is None:
        return DEFAULT_CAP
    try:
        return int(raw)
    except ValueError:
        raise GraphError(f"DARTDIG_CAP is not an integer: {raw!r}") from None


def _load(args) -> Graph:
    if args.graph:
        return named(args.graph)
    if not args.input:
        raise GraphError("give --input PATH or --graph NAME")
    if args.input == "-":
        return parse_edge_list(sys.stdin.read())
    try:
        with open(args.input, encoding="utf-8") as fh:
            return parse_edge_list(fh.read())
    except OSError as exc:
        raise GraphError(f"cannot read {args.input}: {exc.strerror}") from None


def _dart_arg(g: Graph, text: str) -> int:
    try:
        return g.dart_index(int(text))
    except ValueError:
        raise GraphError(f"not a dart id: {text!r}") from None


def _pair_arg(g: Graph, text: str) -> tuple[int, int]:
    parts = text.replace(":", ",").split(",")
    if len(parts) != 2:
        raise GraphError(f"expected a dart-id pair 'x,y', got {text!r}")
    return _dart_arg(g, parts[0]), _dart_arg(g, parts[1])


def _n_range(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition("-")
    try:
        lo_n = int(lo)
        hi_n = int(hi) if hi else lo_n
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO-HI, got {text!r}") from None
    if lo_n < 4 or hi_n < lo_n:
        raise argparse.ArgumentTypeError(f"bad vertex-count range {text!r}")
    return lo_n, hi_n


def cmd_build(args) -> int:
    g = _load(args)
    cap = args.cap if args.cap is not None else _default_cap()
    digraph = build_dart_digraph(g) if args.target == "d" else materialize_a2d(g, cap)
    print(to_json(digraph) if args.format == "json" else to_dot(digraph), end="\n" if args.format == "json" else "")
    return 0


def cmd_check(args) -> int:
    g = _load(args)
    if args.target == "d":
        digraph = build_dart_digraph(g)
    elif args.materialize:
        digraph = materialize_a2d(g, args.cap if args.cap is not None else _default_cap())
    else:
        digraph = squared_dart_digraph(g)
    if digraph.num_vertices == 0:
        raise GraphError("graph has no edges, so the digraph has no vertices")
    check = is_strongly_connected if args.property == "strong" else is_bipartite_digraph
    result = check(digraph)
    print("true" if result else "false")
    return 0 if result else 1


def cmd_witness(args) -> int:
    g = _load(args)
    if args.src is None or args.dst is None:
        raise GraphError("witness needs --src and --dst")
    if args.target == "d":
        walk = d_witness_walk(g, _dart_arg(g, args.src), _dart_arg(g, args.dst))
    else:
        walk = a2d_witness_walk(g, _pair_arg(g, args.src), _pair_arg(g, args.dst))
    print(walk_to_json(g, walk))
    return 0


def cmd_verify(args) -> int:
    if args.mode == "exhaustive":
        if args.max_n is None:
            raise GraphError("exhaustive mode needs --max-n")
        if not 4 <= args.max_n <= 7:
            raise GraphError("--max-n must lie in 4..7")
        graphs = exhaustive_corpus(args.max_n)
    else:
        if args.n is None or args.count is None:
            raise GraphError("random mode needs --n and --count")
        graphs = random_corpus(args.n[0], args.n[1], args.count, args.seed)
    report = run_verify(graphs, args.mode, args.seed, args.samples, args.jobs)
    print(report.to_json(timing=args.timing))
    return 0 if report.ok else 1


def cmd_list_darts(args) -> int:
    g = _load(args)
    for d in g.darts():
        print(f"{d.id} {d.init} {d.term}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dartdig", description="Dart digraphs and squared dart digraphs of simple graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_opts(p):
        src = p.add_mutually_exclusive_group()
        src.add_argument("--input", help="edge-list file ('-' for stdin)")
        src.add_argument("--graph", help="named graph: complete(n), complete_bipartite(a,b), cycle(n), petersen")

    p = sub.add_parser("build", help="serialize D(G) or A2D(G)")
    graph_opts(p)
    p.add_argument("--target", choices=("d", "a2d"), default="d")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--cap", type=int, help="max A2D pair-vertices (default $DARTDIG_CAP or 250000)")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("check", help="decide strong connectivity or bipartiteness")
    graph_opts(p)
    p.add_argument("--target", choices=("d", "a2d"), default="d")
    p.add_argument("--property", choices=("strong", "bipartite"), default="strong")
    p.add_argument("--materialize", action="store_true", help="build A2D explicitly instead of lazily")
    p.add_argument("--cap", type=int)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("witness", help="print a validated witness walk")
    graph_opts(p)
    p.add_argument("--target", choices=("d", "a2d"), default="d")
    p.add_argument("--src", help="dart id (d) or dart-id pair x,y (a2d)")
    p.add_argument("--dst")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", help="check the theorem over a corpus")
    p.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    p.add_argument("--max-n", type=int)
    p.add_argument("--n", type=_n_range, help="vertex count N or range LO-HI")
    p.add_argument("--count", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=5, help="witness walks sampled per graph")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="include wall time in the report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("list-darts", help="print the dart id table: id init term")
    graph_opts(p)
    p.set_defaults(func=cmd_list_darts)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, ValueError) as exc:
        print(f"dartdig: error: {exc}", file=sys.stderr)
        return 2
    except InternalInconsistencyError as exc:
        print(f"dartdig: internal error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
