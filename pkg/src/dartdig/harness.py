"""Mass verification runs over graph corpora."""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .analysis import coloring_is_proper, is_bipartite_digraph, is_strongly_connected
from .constructions import a2d_coloring, build_dart_digraph, dart_digraph_coloring, squared_dart_digraph
from .generators import SplitMix64, enumerate_connected_min3, random_min_degree3
from .graph import Graph, format_edge_list, is_connected, min_degree, proper_two_coloring
from .walks import a2d_witness_walk, arc_cycle_triple, d_witness_walk, validate_walk_in_a2d, validate_walk_in_d

__all__ = ["RunReport", "check_graph", "exhaustive_corpus", "random_corpus", "run_verify"]


@dataclass
class RunReport:
    mode: str
    seed: int
    graphs_tested: int = 0
    failures: list[tuple[str, str]] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self, timing: bool = False) -> str:
        data = {
            "mode": self.mode,
            "seed": self.seed,
            "graphs_tested": self.graphs_tested,
            "failures": [{"graph": g, "property": p} for g, p in self.failures],
        }
        if timing:
            data["elapsed"] = round(self.elapsed, 3)
        return json.dumps(data, indent=2)


def check_graph(g: Graph, seed: int = 0, samples: int = 5) -> list[str]:
    """Names of the properties that fail on g (empty when all hold)."""
    if not is_connected(g) or min_degree(g) < 3:
        return ["hypotheses"]
    failed = []

    def run(name, check):
        try:
            if not check():
                failed.append(name)
        except Exception as exc:  # a crash is reported as a failed property
            failed.append(f"{name}: {type(exc).__name__}: {exc}")

    dd = build_dart_digraph(g)
    a2d = squared_dart_digraph(g)
    run("D strongly connected", lambda: is_strongly_connected(dd))
    run("A2D strongly connected", lambda: is_strongly_connected(a2d))

    coloring = proper_two_coloring(g)
    if coloring is not None:
        run("D colouring proper", lambda: coloring_is_proper(dd, dart_digraph_coloring(g, coloring)))
        run("A2D colouring proper", lambda: coloring_is_proper(a2d, a2d_coloring(g, coloring)))
        run("D bipartite", lambda: is_bipartite_digraph(dd))
        run("A2D bipartite", lambda: is_bipartite_digraph(a2d))

    def gcd_check():
        t = arc_cycle_triple(g)
        return t.gcd_value == (2 if coloring is not None else 1)

    run("arc-cycle gcd", gcd_check)

    rng = SplitMix64(seed)
    nd = g.num_darts

    def witnesses():
        for _ in range(samples):
            x, y = rng.below(nd), rng.below(nd)
            w = d_witness_walk(g, x, y)
            if not (validate_walk_in_d(dd, w) and w.start == x and w.end == y):
                return False
            src = (rng.below(nd), rng.below(nd))
            dst = (rng.below(nd), rng.below(nd))
            w = a2d_witness_walk(g, src, dst)
            if not (validate_walk_in_a2d(g, w) and w.start == src and w.end == dst):
                return False
        return True

    run("witness walks", witnesses)
    return failed


def exhaustive_corpus(max_n: int):
    return list(enumerate_connected_min3(max_n))


def random_corpus(n_lo: int, n_hi: int, count: int, seed: int) -> list[Graph]:
    rng = SplitMix64(seed)
    graphs = []
    for _ in range(count):
        n = n_lo + rng.below(n_hi - n_lo + 1)
        graphs.append(random_min_degree3(n, rng.next_u64()))
    return graphs


def _check_job(args):
    g, seed, samples = args
    return check_graph(g, seed, samples)


def run_verify(graphs: list[Graph], mode: str, seed: int = 0, samples: int = 5, jobs: int = 1) -> RunReport:
    start = time.perf_counter()
    # per-graph seeds depend only on position, so workers cannot change results
    stream = SplitMix64(seed)
    tasks = [(g, stream.next_u64(), samples) for g in graphs]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_check_job, tasks, chunksize=16))
    else:
        results = [_check_job(t) for t in tasks]
    report = RunReport(mode, seed, graphs_tested=len(graphs))
    for g, failed in zip(graphs, results):
        text = format_edge_list(g).strip().replace("\n", "; ")
        report.failures.extend((text, p) for p in failed)
    report.failures.sort()
    report.elapsed = time.perf_counter() - start
    return report
