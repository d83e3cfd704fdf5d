"""Strong connectivity and bipartiteness of explicit and implicit digraphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Union

from . import kernels, _pykernels
from .constructions import DartDigraph, SquaredDartDigraph, _csr

__all__ = ["SccPartition", "scc", "is_strongly_connected", "is_bipartite_digraph", "coloring_is_proper"]

Oracle = Callable[[int], Iterable[int]]
DigraphLike = Union[DartDigraph, SquaredDartDigraph, Oracle]


@dataclass(frozen=True)
class SccPartition:
    component_of: tuple[int, ...]
    count: int

    @property
    def condensation_is_singleton(self) -> bool:
        return self.count == 1

    def components(self) -> list[list[int]]:
        groups: list[list[int]] = [[] for _ in range(self.count)]
        for v, c in enumerate(self.component_of):
            groups[c].append(v)
        return groups


def _vertex_count(dg: DigraphLike, count: int | None) -> int:
    if isinstance(dg, (DartDigraph, SquaredDartDigraph)):
        n = dg.num_vertices
        if count is not None and count != n:
            raise ValueError(f"count={count} disagrees with the digraph's {n} vertices")
    elif count is None:
        raise TypeError("an adjacency oracle needs an explicit vertex count")
    else:
        n = count
    if n < 1:
        raise ValueError("a digraph needs a non-empty vertex set")
    return n


def _oracle_csr(adj: Oracle, n: int):
    return _csr([list(adj(v)) for v in range(n)])


def scc(dg: DigraphLike, count: int | None = None) -> SccPartition:
    """Strongly connected components, numbered in order of least vertex.

    ``dg`` is a :class:`DartDigraph`, a lazy or materialized
    :class:`SquaredDartDigraph`, or a callable mapping a vertex to its
    successors (then ``count`` is required).
    """
    n = _vertex_count(dg, count)
    if isinstance(dg, DartDigraph):
        labels, k = kernels.scc_csr(dg.indptr, dg.indices, n)
    elif isinstance(dg, SquaredDartDigraph):
        if dg.materialized is not None:
            labels, k = kernels.scc_csr(*dg.materialized, n)
        else:
            dd = dg.dart_digraph
            labels, k = kernels.scc_a2d(dd.indptr, dd.indices, dd.num_vertices)
    else:
        labels, k = _scc_oracle(dg, n)
    if hasattr(labels, "tolist"):
        labels = labels.tolist()
    return SccPartition(tuple(labels), int(k))


def _scc_oracle(adj: Oracle, n: int):
    # each vertex's successor list is requested once and kept
    cache: dict[int, list[int]] = {}

    def succ(v: int) -> list[int]:
        s = cache.get(v)
        if s is None:
            s = cache[v] = list(adj(v))
        return s

    return _pykernels._tarjan(n, lambda v: 0, lambda v: len(succ(v)), lambda v, i: succ(v)[i])


def is_strongly_connected(dg: DigraphLike, count: int | None = None) -> bool:
    return scc(dg, count).count == 1


def is_bipartite_digraph(dg: DigraphLike, count: int | None = None) -> bool:
    """Whether the underlying undirected graph of ``dg`` is 2-colourable."""
    n = _vertex_count(dg, count)
    if isinstance(dg, DartDigraph):
        return kernels.bipartite_csr(dg.indptr, dg.indices, dg.rindptr, dg.rindices, n)
    if isinstance(dg, SquaredDartDigraph):
        dd = dg.dart_digraph
        if dg.materialized is None:
            return kernels.bipartite_a2d(dd.indptr, dd.indices, dd.rindptr, dd.rindices, dd.num_vertices)
        indptr, indices = dg.materialized
    else:
        indptr, indices = _oracle_csr(dg, n)
    preds: list[list[int]] = [[] for _ in range(n)]
    for v in range(n):
        for w in indices[indptr[v]:indptr[v + 1]].tolist():
            preds[w].append(v)
    rindptr, rindices = _csr(preds)
    return kernels.bipartite_csr(indptr, indices, rindptr, rindices, n)


def coloring_is_proper(dg: DigraphLike, coloring, count: int | None = None) -> bool:
    """Scan every arc of ``dg``; False on the first monochromatic one."""
    n = _vertex_count(dg, count)
    colors = coloring.colors if hasattr(coloring, "colors") else coloring
    if len(colors) != n:
        return False
    succ = dg.successors if isinstance(dg, (DartDigraph, SquaredDartDigraph)) else dg
    return all(colors[w] != colors[v] for v in range(n) for w in succ(v))
