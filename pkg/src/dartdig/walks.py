"""Constructive certificates for strong connectivity, and their validators.

Every choice (cycle, balloon, neighbour, shortest path) is made by smallest
vertex index first, so certificates are reproducible.  Every constructor runs
the matching validator before returning.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass
from typing import Sequence, Union

from . import kernels
from .constructions import DartDigraph, build_dart_digraph
from .graph import (
    DartLike,
    Graph,
    GraphError,
    is_connected,
    is_two_dart,
    proper_two_coloring,
    require_theorem_hypotheses,
)

__all__ = [
    "Walk",
    "Balloon",
    "ArcCycleTriple",
    "InternalInconsistencyError",
    "validate_s_arc",
    "validate_arc_cycle",
    "validate_balloon",
    "validate_walk_in_d",
    "validate_walk_in_a2d",
    "find_balloon",
    "claim1_walk",
    "claim2_walk",
    "d_witness_walk",
    "arc_cycle_triple",
    "equal_length_walks",
    "a2d_witness_walk",
    "walk_to_json",
    "walk_from_json",
]

WALK_KINDS = ("graph-walk", "s-arc", "d-walk", "a2d-walk")


class InternalInconsistencyError(RuntimeError):
    """A construction that cannot fail under its hypotheses did fail."""


@dataclass(frozen=True)
class Walk:
    vertices: tuple
    kind: str

    def __post_init__(self):
        if self.kind not in WALK_KINDS:
            raise ValueError(f"unknown walk kind {self.kind!r}")
        if not self.vertices:
            raise ValueError("a walk has at least one vertex")

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def start(self):
        return self.vertices[0]

    @property
    def end(self):
        return self.vertices[-1]

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)


@dataclass(frozen=True)
class Balloon:
    """A path ``a0 .. a(s-1)`` of distinct vertices whose last step returns
    to ``a[reattach_index]``."""

    vertices: tuple[int, ...]
    reattach_index: int

    @property
    def s(self) -> int:
        return len(self.vertices) - 1

    @property
    def beginning(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[1]

    def round_trip(self) -> list[int]:
        """Out along the string, around the loop, back along the string."""
        a = list(self.vertices)
        return a + a[self.reattach_index - 1::-1]


@dataclass(frozen=True)
class ArcCycleTriple:
    cycle_c: Walk
    gamma: Walk
    merged: Walk
    gcd_value: int
    edge: tuple[int, int]
    a: int
    b: int
    balloon_a: Balloon
    balloon_b: Balloon

    @property
    def m(self) -> int:
        return self.cycle_c.length

    @property
    def n(self) -> int:
        return self.gamma.length


WalkLike = Union[Walk, Sequence]


def _seq(w: WalkLike) -> tuple:
    return w.vertices if isinstance(w, Walk) else tuple(w)


# -- validators --------------------------------------------------------------


def validate_s_arc(g: Graph, w: WalkLike) -> bool:
    a = _seq(w)
    if not a or not all(isinstance(v, int) and 0 <= v < g.n for v in a):
        return False
    for p, q in zip(a, a[1:]):
        if not g.has_edge(p, q):
            return False
    return all(a[i] != a[i + 2] for i in range(len(a) - 2))


def validate_arc_cycle(g: Graph, w: WalkLike) -> bool:
    a = _seq(w)
    if len(a) < 2 or a[0] != a[-1] or not validate_s_arc(g, a):
        return False
    # wrap-around: first dart (a, b), last dart (c, a), need c != b
    return a[-2] != a[1]


def validate_balloon(g: Graph, b: Balloon) -> bool:
    a = b.vertices
    s = len(a) - 1
    i = b.reattach_index
    return (
        s >= 4
        and len(set(a[:-1])) == s
        and 1 <= i <= s - 3
        and a[s] == a[i]
        and validate_s_arc(g, a)
    )


def validate_walk_in_d(dd: DartDigraph, w: WalkLike) -> bool:
    g = dd.base
    a = _seq(w)
    if not a or not all(isinstance(x, int) and 0 <= x < g.num_darts for x in a):
        return False
    return all(is_two_dart(g, p, q) for p, q in zip(a, a[1:]))


def validate_walk_in_a2d(g: Graph, w: WalkLike) -> bool:
    a = _seq(w)
    nd = g.num_darts
    if not a:
        return False
    for v in a:
        if len(v) != 2 or not all(isinstance(x, int) and 0 <= x < nd for x in v):
            return False
    for (x, y), (z, t) in zip(a, a[1:]):
        if y != z or not is_two_dart(g, x, t):
            return False
    return True


# -- helpers -----------------------------------------------------------------


def _to_darts(g: Graph, path: Sequence[int]) -> list[int]:
    return [g.dart_id(p, q) for p, q in zip(path, path[1:])]


def _concat(first: list, second: list) -> list:
    if first[-1] != second[0]:
        raise InternalInconsistencyError("walks do not meet")
    return first + second[1:]


def _first_back_edge_cycle(g: Graph, root: int, banned: int) -> list[int] | None:
    """DFS from root avoiding ``banned``; the tree path closed by the first
    back edge, as ``[ancestor, ..., descendant]``."""
    path = [root]
    pos = {root: 0}
    visited = {root}
    iters = [iter(g.adjacency[root])]
    while iters:
        parent = path[-2] if len(path) > 1 else None
        for y in iters[-1]:
            if y == banned or y == parent:
                continue
            if y in pos:
                return path[pos[y]:]
            if y in visited:
                continue
            visited.add(y)
            pos[y] = len(path)
            path.append(y)
            iters.append(iter(g.adjacency[y]))
            break
        else:
            iters.pop()
            del pos[path.pop()]
    return None


def _bfs_path(g: Graph, sources: Sequence[int], goal, banned=None, skip_edge=None) -> list[int] | None:
    """Shortest path from the first-listed reachable source to a vertex
    satisfying ``goal``; neighbours in ascending order."""
    parent = {}
    queue = deque()
    for s in sources:
        if s == banned or s in parent:
            continue
        parent[s] = None
        if goal(s):
            return [s]
        queue.append(s)
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if y == banned or y in parent:
                continue
            if skip_edge is not None and {x, y} == skip_edge:
                continue
            parent[y] = x
            if goal(y):
                path = [y]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                return path[::-1]
            queue.append(y)
    return None


def _distances(g: Graph, sources: Sequence[int]) -> list[int]:
    dist = [-1] * g.n
    queue = deque(sources)
    for s in sources:
        dist[s] = 0
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if dist[y] == -1:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


# -- balloons and the two claims --------------------------------------------


def find_balloon(g: Graph, d: DartLike) -> Balloon:
    """A balloon beginning with dart ``d = (u, v)``.

    In ``G - u`` the component of ``v`` still has a cycle; take the first
    cycle closed by DFS from ``v``, reach it from ``v`` by a BFS shortest
    path, and go once around it.
    """
    require_theorem_hypotheses(g)
    u, v = g.ends(d)
    cycle = _first_back_edge_cycle(g, v, banned=u)
    if cycle is None:
        raise InternalInconsistencyError(f"no cycle next to dart {u}->{v} with valence >= 3")
    on_cycle = set(cycle)
    path = _bfs_path(g, [v], on_cycle.__contains__, banned=u)
    k = cycle.index(path[-1])
    loop = cycle[k:] + cycle[:k]
    balloon = Balloon(tuple([u] + path + loop[1:] + [loop[0]]), len(path))
    if not validate_balloon(g, balloon):
        raise InternalInconsistencyError(f"invalid balloon {balloon.vertices}")
    return balloon


def claim1_walk(g: Graph, d: DartLike) -> Walk:
    """A walk in D(G) from ``d`` to its reverse, via a balloon round trip."""
    x = g.dart_index(d)
    walk = Walk(tuple(_to_darts(g, find_balloon(g, x).round_trip())), "d-walk")
    if not (validate_walk_in_d(build_dart_digraph(g), walk) and walk.start == x and walk.end == x ^ 1):
        raise InternalInconsistencyError(f"bad reversal walk for dart {x}")
    return walk


def _edge(g: Graph, e) -> tuple[int, int]:
    u, v = e
    u, v = (u, v) if u < v else (v, u)
    if not g.has_edge(u, v):
        raise GraphError(f"{{{u}, {v}}} is not an edge")
    return u, v


def claim2_walk(g: Graph, e, f) -> Walk:
    """A walk in D(G) from a dart on edge ``e`` to a dart on edge ``f``.

    Follows a shortest path between the two edges; among all such walks the
    lexicographically least vertex sequence is returned.
    """
    if not is_connected(g):
        raise GraphError("graph is not connected")
    e, f = _edge(g, e), _edge(g, f)
    dd = build_dart_digraph(g)
    if e == f:
        return Walk((g.dart_id(*e),), "d-walk")
    dist = _distances(g, f)
    span = min(dist[e[0]], dist[e[1]])
    # start on the endpoint of e nearest f, leaving the other end (u) behind;
    # prefer the smaller u
    v = max(p for p in e if dist[p] == span)
    u = e[0] if v == e[1] else e[1]
    path = [v]
    while dist[path[-1]] > 0:
        here = path[-1]
        path.append(min(y for y in g.adjacency[here] if dist[y] == dist[here] - 1))
    w = path[-1]
    z = f[0] if w == f[1] else f[1]
    walk = Walk(tuple(_to_darts(g, [u] + path + [z])), "d-walk")
    if not validate_walk_in_d(dd, walk):
        raise InternalInconsistencyError(f"bad edge-to-edge walk {e} -> {f}")
    return walk


def d_witness_walk(g: Graph, x: DartLike, y: DartLike) -> Walk:
    """A walk in D(G) from dart x to dart y: the edge-to-edge walk, with a
    reversal walk spliced in at either end when orientations disagree."""
    require_theorem_hypotheses(g)
    x, y = g.dart_index(x), g.dart_index(y)
    if x == y:
        return Walk((x,), "d-walk")
    seq = list(claim2_walk(g, g.edge_of(x), g.edge_of(y)).vertices)
    if seq[0] != x:
        seq = _concat(list(claim1_walk(g, x).vertices), seq)
    if seq[-1] != y:
        seq = _concat(seq, list(claim1_walk(g, y ^ 1).vertices))
    walk = Walk(tuple(seq), "d-walk")
    if not (validate_walk_in_d(build_dart_digraph(g), walk) and walk.start == x and walk.end == y):
        raise InternalInconsistencyError(f"bad witness walk {x} -> {y}")
    return walk


# -- arc-cycles --------------------------------------------------------------


def _shortest_odd_cycle(g: Graph) -> list[int]:
    best = None
    for r in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[r] = 0
        queue = deque([r])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if dist[y] == -1:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
        for p, q in g.edges:
            if dist[p] != -1 and dist[p] == dist[q] and (best is None or 2 * dist[p] + 1 < len(best)):
                up, uq = [p], [q]
                while up[-1] != r:
                    up.append(parent[up[-1]])
                    uq.append(parent[uq[-1]])
                best = up[::-1] + uq[:-1]
    # a shortest odd closed walk cannot repeat a vertex
    if best is None or len(set(best)) != len(best):
        raise InternalInconsistencyError("no simple odd cycle in a non-bipartite graph")
    return best


def _shortest_cycle_through_least_edge(g: Graph) -> list[int]:
    for u, v in g.edges:
        path = _bfs_path(g, [v], lambda t, u=u: t == u, skip_edge={u, v})
        if path is not None:
            return [u] + path[:-1]
    raise InternalInconsistencyError("graph with valence >= 3 has no cycle")


def _orient_at_least_edge(cycle: list[int]) -> list[int]:
    m = len(cycle)
    j = min(range(m), key=lambda i: tuple(sorted((cycle[i], cycle[(i + 1) % m]))))
    p, q = cycle[j], cycle[(j + 1) % m]
    rot = cycle[j:] + cycle[:j]
    if p < q:
        return rot
    # traverse the other way so the smaller end comes first
    return [q, p] + rot[-1:1:-1]


def arc_cycle_triple(g: Graph) -> ArcCycleTriple:
    """Arc-cycles of lengths m, n and m + n - 2 built from one cycle C and
    two balloons.

    C is a shortest odd cycle when G has one, otherwise a shortest cycle
    through the least edge lying on any cycle.  ``{u, v}`` is the least edge
    of C, ``a`` / ``b`` the least neighbours of ``u`` / ``v`` off C.
    """
    require_theorem_hypotheses(g)
    if proper_two_coloring(g) is None:
        cycle = _orient_at_least_edge(_shortest_odd_cycle(g))
    else:
        cycle = _shortest_cycle_through_least_edge(g)
    u, v = cycle[0], cycle[1]
    a = min(t for t in g.adjacency[u] if t not in (v, cycle[-1]))
    b = min(t for t in g.adjacency[v] if t not in (u, cycle[2]))
    ba = find_balloon(g, g.dart_id(u, a))
    bb = find_balloon(g, g.dart_id(v, b))
    closed_c = cycle + [u]
    gamma = ba.round_trip() + bb.round_trip() + [u]
    merged = gamma[:-1] + closed_c[2:]
    m, n = len(closed_c) - 1, len(gamma) - 1
    triple = ArcCycleTriple(
        Walk(tuple(closed_c), "s-arc"),
        Walk(tuple(gamma), "s-arc"),
        Walk(tuple(merged), "s-arc"),
        math.gcd(m, n, m + n - 2),
        (u, v),
        a,
        b,
        ba,
        bb,
    )
    for w in (triple.cycle_c, triple.gamma, triple.merged):
        if not validate_arc_cycle(g, w):
            raise InternalInconsistencyError(f"not an arc-cycle: {w.vertices}")
    if triple.merged.length != m + n - 2:
        raise InternalInconsistencyError("merged arc-cycle has the wrong length")
    return triple


# -- squared dart digraph witnesses -----------------------------------------


def equal_length_walks(dd: DartDigraph, x: DartLike, w: DartLike, y: DartLike, z: DartLike):
    """Walks ``x -> w`` and ``y -> z`` in D(G) of a common, minimal length.

    Breadth-first search over pairs of darts moving in lockstep.  Returns
    ``(alpha, beta)`` or None when no common length exists.
    """
    g = dd.base
    x, w, y, z = (g.dart_index(t) for t in (x, w, y, z))
    found = kernels.product_bfs(dd.indptr, dd.indices, dd.num_vertices, x, y, w, z)
    if found is None:
        return None
    alpha, beta = found
    return Walk(tuple(alpha), "d-walk"), Walk(tuple(beta), "d-walk")


def _interleaved(dd: DartDigraph, src: tuple[int, int], dst: tuple[int, int]) -> list | None:
    found = equal_length_walks(dd, src[0], dst[0], src[1], dst[1])
    if found is None:
        return None
    alpha, beta = found[0].vertices, found[1].vertices
    out = []
    for i in range(len(alpha) - 1):
        out.append((alpha[i], beta[i]))
        out.append((beta[i], alpha[i + 1]))
    out.append((alpha[-1], beta[-1]))
    return out


def a2d_witness_walk(g: Graph, src, dst) -> Walk:
    """A walk in A2D(G) between two dart pairs.

    Two equal-length walks ``x -> w`` and ``y -> z`` in D(G) interleave into
    a walk ``(x, y) -> (w, z)`` of twice their length.  When no common length
    exists (bipartite G, endpoints of opposite colour) one step is taken out
    of ``src`` or into ``dst`` first.
    """
    require_theorem_hypotheses(g)
    src = (g.dart_index(src[0]), g.dart_index(src[1]))
    dst = (g.dart_index(dst[0]), g.dart_index(dst[1]))
    dd = build_dart_digraph(g)
    if src == dst:
        return Walk((src,), "a2d-walk")
    seq = _interleaved(dd, src, dst)
    if seq is None:
        for nxt in ((src[1], t) for t in dd.out_adj[src[0]]):
            tail = _interleaved(dd, nxt, dst)
            if tail is not None:
                seq = [src] + tail
                break
    if seq is None:
        for prv in ((t, dst[0]) for t in dd.in_adj[dst[1]]):
            head = _interleaved(dd, src, prv)
            if head is not None:
                seq = head + [dst]
                break
    if seq is None:
        raise InternalInconsistencyError(f"no A2D walk {src} -> {dst} in a graph meeting the hypotheses")
    walk = Walk(tuple(seq), "a2d-walk")
    if not (validate_walk_in_a2d(g, walk) and walk.start == src and walk.end == dst):
        raise InternalInconsistencyError(f"bad A2D witness {src} -> {dst}")
    return walk


# -- serialization -----------------------------------------------------------


def walk_to_json(g: Graph, walk: Walk) -> str:
    """D-walks as ``[[u, v], ...]`` darts; A2D-walks as pair codes ``x * nd + y``."""
    if walk.kind == "d-walk":
        body = [list(g.ends(x)) for x in walk.vertices]
    elif walk.kind == "a2d-walk":
        nd = g.num_darts
        body = [x * nd + y for x, y in walk.vertices]
    else:
        body = list(walk.vertices)
    return json.dumps({"kind": walk.kind, "length": walk.length, "walk": body}, separators=(",", ":"))


def walk_from_json(g: Graph, text: str) -> Walk:
    data = json.loads(text)
    kind = data["kind"]
    if kind == "d-walk":
        vertices = tuple(g.dart_id(u, v) for u, v in data["walk"])
    elif kind == "a2d-walk":
        nd = g.num_darts
        vertices = tuple(divmod(int(p), nd) for p in data["walk"])
    else:
        vertices = tuple(data["walk"])
    return Walk(vertices, kind)
