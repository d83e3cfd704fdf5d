"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3] [--sizes 10 16 24 32]
"""

import argparse
import time

from dartdig import build_dart_digraph, petersen, random_min_degree3
from dartdig.kernels import available_backends


def best_of(repeat, fn):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--sizes", type=int, nargs="+", default=[10, 16, 24, 32])
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    backends = available_backends()
    if len(backends) < 2:
        print("compiled extension not built; only the fallback is available")
    graphs = [("petersen", petersen())] + [(f"random(n={n})", random_min_degree3(n, args.seed)) for n in args.sizes]

    header = f"{'graph':<16}{'darts':>6}{'A2D verts':>11}  {'kernel':<14}" + "".join(f"{b.BACKEND:>11}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for name, g in graphs:
        dd = build_dart_digraph(g)
        nd = dd.num_vertices
        jobs = {
            "scc_a2d": lambda b: b.scc_a2d(dd.indptr, dd.indices, nd),
            "bipartite_a2d": lambda b: b.bipartite_a2d(dd.indptr, dd.indices, dd.rindptr, dd.rindices, nd),
            # walks from the first dart pair to the last one
            "product_bfs": lambda b: b.product_bfs(dd.indptr, dd.indices, nd, 0, 1, nd - 1, nd - 2),
        }
        for kernel, job in jobs.items():
            times = [best_of(args.repeat, lambda b=b: job(b)) for b in backends]
            row = f"{name:<16}{nd:>6}{nd * nd:>11}  {kernel:<14}" + "".join(f"{t * 1e3:>9.2f}ms" for t in times)
            if len(times) == 2:
                row += f"{times[0] / times[1]:>9.1f}x"
            print(row)


if __name__ == "__main__":
    main()
