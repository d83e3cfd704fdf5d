"""The dart digraph D(G) and the squared dart digraph A2D(G).

D(G) has the darts of G as vertices and the 2-darts as arcs; it is always
built explicitly.  A2D(G) lives on ordered pairs of darts, encoded as
``x * nd + y`` with ``nd`` the number of darts, and is lazy unless
:func:`materialize_a2d` is asked for it.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass, field
from typing import Iterator, Optional

import numpy as np

from .graph import DartLike, Graph, GraphError, TwoColoring

__all__ = [
    "DartDigraph",
    "SquaredDartDigraph",
    "SizeLimitError",
    "build_dart_digraph",
    "squared_dart_digraph",
    "a2d_out_neighbors",
    "a2d_in_neighbors",
    "materialize_a2d",
    "dart_digraph_coloring",
    "a2d_coloring",
    "to_json",
    "to_dot",
]


class SizeLimitError(GraphError):
    def __init__(self, size: int, cap: int):
        super().__init__(f"A2D has {size} pair-vertices, above the cap of {cap}")
        self.size = size
        self.cap = cap


def _csr(rows: list[list[int]]) -> tuple[np.ndarray, np.ndarray]:
    indptr = np.zeros(len(rows) + 1, dtype=np.intc)
    indptr[1:] = np.cumsum([len(r) for r in rows])
    flat = [w for r in rows for w in r]
    return indptr, np.asarray(flat, dtype=np.intc)


@dataclass(frozen=True, eq=False)
class DartDigraph:
    base: Graph
    out_adj: tuple[tuple[int, ...], ...]
    in_adj: tuple[tuple[int, ...], ...] = field(repr=False)
    indptr: np.ndarray = field(repr=False)
    indices: np.ndarray = field(repr=False)
    rindptr: np.ndarray = field(repr=False)
    rindices: np.ndarray = field(repr=False)

    @property
    def num_vertices(self) -> int:
        return len(self.out_adj)

    @property
    def num_darts(self) -> int:
        return len(self.indices)

    def successors(self, x: int) -> tuple[int, ...]:
        return self.out_adj[x]

    def predecessors(self, x: int) -> tuple[int, ...]:
        return self.in_adj[x]

    def arcs(self) -> Iterator[tuple[int, int]]:
        for x, succ in enumerate(self.out_adj):
            for y in succ:
                yield x, y

    def label(self, x: int) -> str:
        u, v = self.base.ends(x)
        return f"{u}->{v}"


@functools.lru_cache(maxsize=128)
def build_dart_digraph(g: Graph) -> DartDigraph:
    nd = g.num_darts
    out_adj: list[list[int]] = [[] for _ in range(nd)]
    in_adj: list[list[int]] = [[] for _ in range(nd)]
    for x in range(nd):
        u, v = g.ends(x)
        for w in g.adjacency[v]:
            if w != u:
                # dart ids of (v, w) increase with w, so rows come out sorted
                y = g.dart_id(v, w)
                out_adj[x].append(y)
                in_adj[y].append(x)
    indptr, indices = _csr(out_adj)
    rindptr, rindices = _csr(in_adj)
    return DartDigraph(
        g,
        tuple(map(tuple, out_adj)),
        tuple(map(tuple, in_adj)),
        indptr,
        indices,
        rindptr,
        rindices,
    )


@dataclass(frozen=True, eq=False)
class SquaredDartDigraph:
    base: Graph
    dart_digraph: DartDigraph = field(repr=False)
    materialized: Optional[tuple[np.ndarray, np.ndarray]] = field(default=None, repr=False)

    @property
    def nd(self) -> int:
        return self.dart_digraph.num_vertices

    @property
    def num_vertices(self) -> int:
        return self.nd * self.nd

    @property
    def num_darts(self) -> int:
        # out-degree of (x, y) depends on x only
        return self.nd * self.dart_digraph.num_darts

    @property
    def is_materialized(self) -> bool:
        return self.materialized is not None

    def encode(self, x: int, y: int) -> int:
        return x * self.nd + y

    def decode(self, p: int) -> tuple[int, int]:
        return divmod(p, self.nd)

    def successors(self, p: int) -> list[int]:
        if self.materialized is not None:
            indptr, indices = self.materialized
            return indices[indptr[p]:indptr[p + 1]].tolist()
        x, y = divmod(p, self.nd)
        base = y * self.nd
        return [base + w for w in self.dart_digraph.out_adj[x]]

    def out_neighbors(self, pair: tuple[int, int]) -> list[tuple[int, int]]:
        x, y = pair
        return [(y, w) for w in self.dart_digraph.out_adj[x]]

    def in_neighbors(self, pair: tuple[int, int]) -> list[tuple[int, int]]:
        z, w = pair
        return [(x, z) for x in self.dart_digraph.in_adj[w]]

    def arcs(self) -> Iterator[tuple[int, int]]:
        for p in range(self.num_vertices):
            for q in self.successors(p):
                yield p, q

    def label(self, p: int) -> str:
        x, y = divmod(p, self.nd)
        return f"({self.dart_digraph.label(x)}, {self.dart_digraph.label(y)})"


def squared_dart_digraph(g: Graph) -> SquaredDartDigraph:
    return SquaredDartDigraph(g, build_dart_digraph(g))


def a2d_out_neighbors(g: Graph, v: tuple[DartLike, DartLike]) -> list[tuple[int, int]]:
    """All ``(y, w)`` with ``(x, w)`` a 2-dart, sorted by ``w``."""
    x, y = g.dart_index(v[0]), g.dart_index(v[1])
    return [(y, w) for w in build_dart_digraph(g).out_adj[x]]


def a2d_in_neighbors(g: Graph, v: tuple[DartLike, DartLike]) -> list[tuple[int, int]]:
    z, w = g.dart_index(v[0]), g.dart_index(v[1])
    return [(x, z) for x in build_dart_digraph(g).in_adj[w]]


def materialize_a2d(g: Graph, cap: int = 250_000) -> SquaredDartDigraph:
    dd = build_dart_digraph(g)
    nd = dd.num_vertices
    if nd * nd > cap:
        raise SizeLimitError(nd * nd, cap)
    outdeg = np.diff(dd.indptr)
    indptr = np.zeros(nd * nd + 1, dtype=np.intc)
    indptr[1:] = np.cumsum(np.repeat(outdeg, nd))
    rows = np.arange(nd, dtype=np.intc)[:, None] * nd
    blocks = [(rows + dd.indices[dd.indptr[x]:dd.indptr[x + 1]][None, :]).ravel() for x in range(nd)]
    indices = np.concatenate(blocks).astype(np.intc) if blocks else np.zeros(0, dtype=np.intc)
    return SquaredDartDigraph(g, dd, (indptr, indices))


def _check_proper(g: Graph, c: TwoColoring) -> None:
    if len(c) != g.n:
        raise GraphError(f"colouring has {len(c)} entries for {g.n} vertices")
    for u, v in g.edges:
        if c[u] == c[v]:
            raise GraphError(f"colouring is not proper: edge ({u}, {v}) is monochromatic")


def dart_digraph_coloring(g: Graph, c: TwoColoring) -> TwoColoring:
    """Each dart takes the colour of its initial vertex."""
    _check_proper(g, c)
    return TwoColoring(tuple(c[g.init(x)] for x in range(g.num_darts)), "vertices-of-D")


def a2d_coloring(g: Graph, c: TwoColoring) -> TwoColoring:
    """Pair (x, y) gets 0 (blue) when x and y start on equal colours, else 1 (red)."""
    dcol = dart_digraph_coloring(g, c).colors
    return TwoColoring(tuple(cx ^ cy for cx in dcol for cy in dcol), "vertices-of-A2D")


def to_json(digraph: DartDigraph | SquaredDartDigraph) -> str:
    return json.dumps(
        {"vertices": digraph.num_vertices, "darts": [[p, q] for p, q in digraph.arcs()]},
        separators=(",", ":"),
    )


def to_dot(digraph: DartDigraph | SquaredDartDigraph) -> str:
    name = "D" if isinstance(digraph, DartDigraph) else "A2D"
    lines = [f"digraph {name} {{"]
    for p in range(digraph.num_vertices):
        lines.append(f'  {p} [label="{digraph.label(p)}"];')
    for p, q in digraph.arcs():
        lines.append(f"  {p} -> {q};")
    lines.append("}")
    return "\n".join(lines) + "\n"
