"""Simple undirected graphs, their darts, and the 2-dart relation.

Vertices are the integers ``0..n-1``.  Edges are stored once, as ``(u, v)``
with ``u < v``, sorted lexicographically; edge number ``e`` owns the two darts
``2e`` (``u -> v``) and ``2e + 1`` (``v -> u``).  Reversing a dart is
therefore ``id ^ 1``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence, Union

__all__ = [
    "Dart",
    "DartLike",
    "Graph",
    "GraphError",
    "HypothesisError",
    "TwoColoring",
    "from_edge_list",
    "parse_edge_list",
    "format_edge_list",
    "darts",
    "is_two_dart",
    "is_connected",
    "min_degree",
    "proper_two_coloring",
    "require_theorem_hypotheses",
]


class GraphError(ValueError):
    """Malformed graph input or an argument that is not part of the graph."""


class HypothesisError(GraphError):
    """The graph is outside the class a construction is guaranteed for
    (connected, every vertex of valence at least 3)."""


class Dart(NamedTuple):
    init: int
    term: int
    id: int

    def __str__(self) -> str:
        return f"{self.init}->{self.term}"


DartLike = Union[Dart, int]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)
    _dart_ends: tuple[tuple[int, int], ...] = field(repr=False, compare=False)
    _dart_index: dict = field(repr=False, compare=False, hash=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 1:
            raise GraphError("a graph needs at least one vertex")
        canon = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}: ({u}, {v})")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            canon.add((u, v) if u < v else (v, u))
        sorted_edges = tuple(sorted(canon))
        nbrs: list[list[int]] = [[] for _ in range(n)]
        ends = []
        index = {}
        for e, (u, v) in enumerate(sorted_edges):
            nbrs[u].append(v)
            nbrs[v].append(u)
            ends.append((u, v))
            ends.append((v, u))
            index[(u, v)] = 2 * e
            index[(v, u)] = 2 * e + 1
        adjacency = tuple(tuple(sorted(a)) for a in nbrs)
        return cls(n, sorted_edges, adjacency, tuple(ends), index)

    # -- sizes -------------------------------------------------------------

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def num_darts(self) -> int:
        return 2 * len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._dart_index

    # -- darts -------------------------------------------------------------

    def dart(self, d: DartLike) -> Dart:
        i = self.dart_index(d)
        u, v = self._dart_ends[i]
        return Dart(u, v, i)

    def dart_index(self, d: DartLike) -> int:
        if isinstance(d, Dart):
            if self._dart_index.get((d.init, d.term)) != d.id:
                raise GraphError(f"{d} is not a dart of this graph")
            return d.id
        i = int(d)
        if not 0 <= i < len(self._dart_ends):
            raise GraphError(f"dart id {i} out of range (graph has {self.num_darts} darts)")
        return i

    def dart_id(self, u: int, v: int) -> int:
        try:
            return self._dart_index[(u, v)]
        except KeyError:
            raise GraphError(f"({u}, {v}) is not a dart of this graph") from None

    def ends(self, d: DartLike) -> tuple[int, int]:
        return self._dart_ends[self.dart_index(d)]

    def init(self, d: int) -> int:
        return self._dart_ends[d][0]

    def term(self, d: int) -> int:
        return self._dart_ends[d][1]

    @staticmethod
    def reverse(d: int) -> int:
        return d ^ 1

    def edge_of(self, d: DartLike) -> tuple[int, int]:
        return self.edges[self.dart_index(d) >> 1]

    def darts(self) -> list[Dart]:
        return [Dart(u, v, i) for i, (u, v) in enumerate(self._dart_ends)]


@dataclass(frozen=True)
class TwoColoring:
    """A 0/1 colouring indexed by element (vertex, dart id, or pair code)."""

    colors: tuple[int, ...]
    scope: str

    def __getitem__(self, item: int) -> int:
        return self.colors[item]

    def __len__(self) -> int:
        return len(self.colors)

    def counts(self) -> tuple[int, int]:
        ones = sum(self.colors)
        return len(self.colors) - ones, ones


def from_edge_list(pairs: Sequence[tuple[int, int]], n: int | None = None) -> Graph:
    """Build a graph from vertex pairs, dropping duplicate edges.

    Without ``n`` the vertex set is inferred and must be dense: every index in
    ``0..max`` has to occur in some pair.  With ``n`` given, isolated vertices
    are allowed.
    """
    pairs = [(int(u), int(v)) for u, v in pairs]
    for u, v in pairs:
        if u == v:
            raise GraphError(f"loop at vertex {u}: ({u}, {v})")
        if u < 0 or v < 0:
            raise GraphError(f"negative vertex index in ({u}, {v})")
    if n is None:
        if not pairs:
            return Graph.from_edges(1, ())
        seen = {x for p in pairs for x in p}
        n = max(seen) + 1
        if len(seen) != n:
            missing = sorted(set(range(n)) - seen)
            raise GraphError(f"vertex indices are not dense; missing {missing[:10]}")
    return Graph.from_edges(n, pairs)


def parse_edge_list(text: str) -> Graph:
    """Parse the ``u v`` per line text format (``#`` comments, blank lines ok)."""
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise GraphError(f"line {lineno}: expected two vertex indices, got {raw!r}")
        try:
            u, v = int(fields[0], 10), int(fields[1], 10)
        except ValueError:
            raise GraphError(f"line {lineno}: not a decimal integer pair: {raw!r}") from None
        pairs.append((u, v))
    return from_edge_list(pairs)


def format_edge_list(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges)


def darts(g: Graph) -> list[Dart]:
    return g.darts()


def is_two_dart(g: Graph, x: DartLike, y: DartLike) -> bool:
    """True iff x ends where y starts and y does not walk straight back."""
    xu, xv = g.ends(x)
    yu, yv = g.ends(y)
    return xv == yu and xu != yv


def is_connected(g: Graph) -> bool:
    seen = [False] * g.n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        v = stack.pop()
        for w in g.adjacency[v]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == g.n


def min_degree(g: Graph) -> int:
    return min(len(a) for a in g.adjacency)


def proper_two_coloring(g: Graph) -> TwoColoring | None:
    """BFS 2-colouring; the least vertex of every component gets colour 0.

    Returns None when g contains an odd cycle.
    """
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if color[w] == -1:
                    color[w] = color[v] ^ 1
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    return TwoColoring(tuple(color), "vertices-of-graph")


def require_theorem_hypotheses(g: Graph) -> None:
    if not is_connected(g):
        raise HypothesisError("graph is not connected")
    if g.num_edges == 0 or min_degree(g) < 3:
        raise HypothesisError(f"minimum valence is {min_degree(g)}, need at least 3")
