"""Pure-Python kernels; same signatures and results as ``_speedups``.

Digraphs are passed in CSR form (``indptr``, ``indices``).  The ``*_a2d``
kernels work on the squared dart digraph without building it: given the CSR
of the dart digraph on ``nd`` darts, vertex ``x * nd + y`` has successors
``y * nd + w`` for every successor ``w`` of ``x``.
"""

from collections import deque

BACKEND = "python"


def _ints(seq):
    return seq.tolist() if hasattr(seq, "tolist") else list(seq)


def _relabel(raw, n):
    # components numbered in order of their least vertex
    mapping = {}
    labels = [0] * n
    for v in range(n):
        r = raw[v]
        if r not in mapping:
            mapping[r] = len(mapping)
        labels[v] = mapping[r]
    return labels, len(mapping)


def _tarjan(n, first, last, target):
    """Iterative Tarjan.  Successors of v are ``target(v, i)`` for
    ``first(v) <= i < last(v)``."""
    index = [-1] * n
    low = [0] * n
    onstack = [False] * n
    raw = [-1] * n
    stack = []
    counter = 0
    ncomp = 0
    for root in range(n):
        if index[root] != -1:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        onstack[root] = True
        call = [[root, first(root), last(root)]]
        while call:
            frame = call[-1]
            v, pos, end = frame
            if pos < end:
                frame[1] = pos + 1
                w = target(v, pos)
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    onstack[w] = True
                    call.append([w, first(w), last(w)])
                elif onstack[w] and index[w] < low[v]:
                    low[v] = index[w]
                continue
            call.pop()
            if call:
                u = call[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    onstack[w] = False
                    raw[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
    return _relabel(raw, n)


def scc_csr(indptr, indices, n):
    indptr = _ints(indptr)
    indices = _ints(indices)
    return _tarjan(
        n,
        indptr.__getitem__,
        lambda v: indptr[v + 1],
        lambda v, i: indices[i],
    )


def scc_a2d(indptr, indices, nd):
    indptr = _ints(indptr)
    indices = _ints(indices)
    return _tarjan(
        nd * nd,
        lambda p: indptr[p // nd],
        lambda p: indptr[p // nd + 1],
        lambda p, i: (p % nd) * nd + indices[i],
    )


def _two_color(n, neighbors):
    color = [-1] * n
    for root in range(n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            c = color[v] ^ 1
            for w in neighbors(v):
                if color[w] == -1:
                    color[w] = c
                    queue.append(w)
                elif color[w] != c:
                    return False
    return True


def bipartite_csr(indptr, indices, rindptr, rindices, n):
    """True iff the underlying undirected graph is 2-colourable."""
    indptr, indices = _ints(indptr), _ints(indices)
    rindptr, rindices = _ints(rindptr), _ints(rindices)

    def neighbors(v):
        yield from indices[indptr[v]:indptr[v + 1]]
        yield from rindices[rindptr[v]:rindptr[v + 1]]

    return _two_color(n, neighbors)


def bipartite_a2d(indptr, indices, rindptr, rindices, nd):
    indptr, indices = _ints(indptr), _ints(indices)
    rindptr, rindices = _ints(rindptr), _ints(rindices)

    def neighbors(p):
        x, y = divmod(p, nd)
        base = y * nd
        for w in indices[indptr[x]:indptr[x + 1]]:
            yield base + w
        # predecessors of (x, y) are (u, x) with y a successor of u
        for u in rindices[rindptr[y]:rindptr[y + 1]]:
            yield u * nd + x

    return _two_color(nd * nd, neighbors)


def product_bfs(indptr, indices, nd, x, y, w, z):
    """Shortest pair of equal-length walks x -> w and y -> z.

    Returns ``(alpha, beta)`` as vertex lists, or None if no length works.
    """
    start = x * nd + y
    goal = w * nd + z
    if start == goal:
        return [x], [y]
    indptr = _ints(indptr)
    indices = _ints(indices)
    succ = [indices[indptr[v]:indptr[v + 1]] for v in range(nd)]
    parent = {start: -1}
    queue = deque([start])
    while queue:
        s = queue.popleft()
        a, b = divmod(s, nd)
        sb = succ[b]
        for a2 in succ[a]:
            row = a2 * nd
            for b2 in sb:
                t = row + b2
                if t in parent:
                    continue
                parent[t] = s
                if t == goal:
                    alpha, beta = [], []
                    while t != -1:
                        a3, b3 = divmod(t, nd)
                        alpha.append(a3)
                        beta.append(b3)
                        t = parent[t]
                    alpha.reverse()
                    beta.reverse()
                    return alpha, beta
                queue.append(t)
    return None
