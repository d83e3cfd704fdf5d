"""Graph corpora: named families, seeded random graphs, exhaustive enumeration."""

from __future__ import annotations

import re
from itertools import combinations
from typing import Iterator

from .graph import Graph, GraphError, is_connected, min_degree

__all__ = [
    "SplitMix64",
    "complete",
    "complete_bipartite",
    "cycle",
    "petersen",
    "named",
    "random_min_degree3",
    "enumerate_stratum",
    "enumerate_connected_min3",
    "GenerationError",
]

_MASK64 = (1 << 64) - 1


class GenerationError(RuntimeError):
    pass


class SplitMix64:
    """SplitMix64 (Steele, Lea, Flood 2014).

    Chosen over :mod:`random` because its output is fixed by a few lines of
    integer arithmetic, so a seed reproduces the same graph anywhere.
    """

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - (1 << 64) % bound
        while True:
            r = self.next_u64()
            if r < limit:
                return r % bound


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a simple cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


_NAMED = {
    "complete": (complete, 1),
    "k": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "cycle": (cycle, 1),
    "c": (cycle, 1),
    "petersen": (petersen, 0),
}


def named(name: str) -> Graph:
    """Parse ``complete(4)``, ``complete_bipartite(3,3)``, ``cycle(6)`` or
    ``petersen``."""
    m = re.fullmatch(r"\s*([A-Za-z_]+)\s*(?:\(([^)]*)\))?\s*", name)
    if not m or m.group(1).lower() not in _NAMED:
        raise GraphError(f"unknown graph name {name!r}")
    build, arity = _NAMED[m.group(1).lower()]
    args = [a.strip() for a in (m.group(2) or "").split(",") if a.strip()]
    if len(args) != arity:
        raise GraphError(f"{m.group(1)} takes {arity} integer argument(s)")
    try:
        return build(*(int(a) for a in args))
    except ValueError as exc:
        raise GraphError(f"bad arguments in {name!r}: {exc}") from None


def random_min_degree3(n: int, seed: int, max_tries: int = 10_000) -> Graph:
    """Seeded random connected graph on n vertices with every valence >= 3.

    Each attempt draws a number of extra edges in ``[0, n // 2]``.  Then,
    while some vertex has valence below 3, a uniformly chosen deficient vertex
    is joined to a uniformly chosen non-neighbour; after that the extra edges
    are added between uniform non-adjacent pairs.  Disconnected outcomes are
    rejected and the stream moves on.
    """
    if n < 4:
        raise ValueError(f"no simple graph on {n} vertices has minimum valence 3")
    rng = SplitMix64(seed)
    total_pairs = n * (n - 1) // 2
    for _ in range(max_tries):
        extra = rng.below(n // 2 + 1)
        nbrs: list[set[int]] = [set() for _ in range(n)]
        while True:
            deficient = [v for v in range(n) if len(nbrs[v]) < 3]
            if not deficient:
                break
            u = deficient[rng.below(len(deficient))]
            options = [w for w in range(n) if w != u and w not in nbrs[u]]
            w = options[rng.below(len(options))]
            nbrs[u].add(w)
            nbrs[w].add(u)
        edges = sum(len(s) for s in nbrs) // 2
        for _ in range(min(extra, total_pairs - edges)):
            free = [(u, w) for u in range(n) for w in range(u + 1, n) if w not in nbrs[u]]
            u, w = free[rng.below(len(free))]
            nbrs[u].add(w)
            nbrs[w].add(u)
        g = Graph.from_edges(n, ((u, w) for u in range(n) for w in nbrs[u] if u < w))
        if is_connected(g):
            return g
    raise GenerationError(f"no connected graph after {max_tries} attempts (n={n}, seed={seed})")


def enumerate_stratum(n: int) -> list[Graph]:
    """All labeled connected graphs on exactly n vertices with valence >= 3,
    sorted by edge list."""
    pairs = list(combinations(range(n), 2))
    touch = [0] * n
    for i, (u, v) in enumerate(pairs):
        touch[u] |= 1 << i
        touch[v] |= 1 << i
    found = []
    for mask in range(1 << len(pairs)):
        if all((mask & t).bit_count() >= 3 for t in touch):
            g = Graph.from_edges(n, (p for i, p in enumerate(pairs) if mask >> i & 1))
            if is_connected(g):
                found.append(g)
    found.sort(key=lambda g: g.edges)
    return found


def enumerate_connected_min3(max_n: int, min_n: int = 4) -> Iterator[Graph]:
    if not 4 <= max_n <= 7:
        raise ValueError(f"max_n must lie in 4..7, got {max_n}")
    for n in range(max(4, min_n), max_n + 1):
        for g in enumerate_stratum(n):
            assert min_degree(g) >= 3
            yield g
