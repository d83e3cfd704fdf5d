# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; see ``_pykernels`` for the reference semantics."""

import numpy as np

BACKEND = "cython"


cdef object _relabel(int[::1] raw, Py_ssize_t n):
    cdef Py_ssize_t v
    cdef int nxt = 0
    cdef int[::1] mapping = np.full(n if n > 0 else 1, -1, dtype=np.intc)
    out = np.empty(n, dtype=np.intc)
    cdef int[::1] labels = out
    for v in range(n):
        if mapping[raw[v]] == -1:
            mapping[raw[v]] = nxt
            nxt += 1
        labels[v] = mapping[raw[v]]
    return out, nxt


cdef object _tarjan(const int[::1] indptr, const int[::1] indices,
                    Py_ssize_t nd, bint squared):
    # squared: vertex p = x * nd + y, successors y * nd + indices[indptr[x]:indptr[x+1]]
    cdef Py_ssize_t n = nd * nd if squared else nd
    cdef int[::1] index = np.full(n, -1, dtype=np.intc)
    cdef int[::1] low = np.zeros(n, dtype=np.intc)
    cdef char[::1] onstack = np.zeros(n, dtype=np.int8)
    cdef int[::1] raw = np.zeros(n, dtype=np.intc)
    cdef int[::1] stack = np.empty(n, dtype=np.intc)
    cdef int[::1] cv = np.empty(n, dtype=np.intc)
    cdef int[::1] cpos = np.empty(n, dtype=np.intc)
    cdef int[::1] cend = np.empty(n, dtype=np.intc)
    cdef Py_ssize_t sp = 0, depth = 0, root
    cdef int counter = 0, ncomp = 0
    cdef int v, w, u, pos, row, head

    for root in range(n):
        if index[root] != -1:
            continue
        index[root] = counter
        low[root] = counter
        counter += 1
        stack[sp] = <int>root
        sp += 1
        onstack[root] = 1
        head = <int>(root // nd) if squared else <int>root
        cv[0] = <int>root
        cpos[0] = indptr[head]
        cend[0] = indptr[head + 1]
        depth = 1
        while depth > 0:
            v = cv[depth - 1]
            pos = cpos[depth - 1]
            if pos < cend[depth - 1]:
                cpos[depth - 1] = pos + 1
                if squared:
                    w = (v % nd) * nd + indices[pos]
                else:
                    w = indices[pos]
                if index[w] == -1:
                    index[w] = counter
                    low[w] = counter
                    counter += 1
                    stack[sp] = w
                    sp += 1
                    onstack[w] = 1
                    head = w // nd if squared else w
                    cv[depth] = w
                    cpos[depth] = indptr[head]
                    cend[depth] = indptr[head + 1]
                    depth += 1
                elif onstack[w] and index[w] < low[v]:
                    low[v] = index[w]
                continue
            depth -= 1
            if depth > 0:
                u = cv[depth - 1]
                if low[v] < low[u]:
                    low[u] = low[v]
            if low[v] == index[v]:
                while True:
                    sp -= 1
                    w = stack[sp]
                    onstack[w] = 0
                    raw[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
    return _relabel(raw, n)


def scc_csr(indptr, indices, n):
    return _tarjan(np.ascontiguousarray(indptr, dtype=np.intc),
                   np.ascontiguousarray(indices, dtype=np.intc), n, False)


def scc_a2d(indptr, indices, nd):
    return _tarjan(np.ascontiguousarray(indptr, dtype=np.intc),
                   np.ascontiguousarray(indices, dtype=np.intc), nd, True)


cdef bint _two_color(const int[::1] indptr, const int[::1] indices,
                     const int[::1] rindptr, const int[::1] rindices,
                     Py_ssize_t nd, bint squared):
    cdef Py_ssize_t n = nd * nd if squared else nd
    cdef signed char[::1] color = np.full(n, -1, dtype=np.int8)
    cdef int[::1] queue = np.empty(n, dtype=np.intc)
    cdef Py_ssize_t root, qh, qt
    cdef int v, w, x, y, i
    cdef signed char c
    for root in range(n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue[0] = <int>root
        qh = 0
        qt = 1
        while qh < qt:
            v = queue[qh]
            qh += 1
            c = 1 - color[v]
            if squared:
                x = v // nd
                y = v % nd
                for i in range(indptr[x], indptr[x + 1]):
                    w = y * nd + indices[i]
                    if color[w] == -1:
                        color[w] = c
                        queue[qt] = w
                        qt += 1
                    elif color[w] != c:
                        return False
                for i in range(rindptr[y], rindptr[y + 1]):
                    w = rindices[i] * nd + x
                    if color[w] == -1:
                        color[w] = c
                        queue[qt] = w
                        qt += 1
                    elif color[w] != c:
                        return False
            else:
                for i in range(indptr[v], indptr[v + 1]):
                    w = indices[i]
                    if color[w] == -1:
                        color[w] = c
                        queue[qt] = w
                        qt += 1
                    elif color[w] != c:
                        return False
                for i in range(rindptr[v], rindptr[v + 1]):
                    w = rindices[i]
                    if color[w] == -1:
                        color[w] = c
                        queue[qt] = w
                        qt += 1
                    elif color[w] != c:
                        return False
    return True


def bipartite_csr(indptr, indices, rindptr, rindices, n):
    return bool(_two_color(
        np.ascontiguousarray(indptr, dtype=np.intc), np.ascontiguousarray(indices, dtype=np.intc),
        np.ascontiguousarray(rindptr, dtype=np.intc), np.ascontiguousarray(rindices, dtype=np.intc),
        n, False))


def bipartite_a2d(indptr, indices, rindptr, rindices, nd):
    return bool(_two_color(
        np.ascontiguousarray(indptr, dtype=np.intc), np.ascontiguousarray(indices, dtype=np.intc),
        np.ascontiguousarray(rindptr, dtype=np.intc), np.ascontiguousarray(rindices, dtype=np.intc),
        nd, True))


def product_bfs(indptr_in, indices_in, Py_ssize_t nd, int x, int y, int w, int z):
    cdef const int[::1] indptr = np.ascontiguousarray(indptr_in, dtype=np.intc)
    cdef const int[::1] indices = np.ascontiguousarray(indices_in, dtype=np.intc)
    cdef int start = x * nd + y
    cdef int goal = w * nd + z
    if start == goal:
        return [x], [y]
    cdef Py_ssize_t n = nd * nd
    cdef int[::1] parent = np.full(n, -2, dtype=np.intc)
    cdef int[::1] queue = np.empty(n, dtype=np.intc)
    cdef Py_ssize_t qh = 0, qt = 1
    cdef int s, a, b, i, j, t, row
    cdef bint found = False
    parent[start] = -1
    queue[0] = start
    while qh < qt and not found:
        s = queue[qh]
        qh += 1
        a = s // nd
        b = s % nd
        for i in range(indptr[a], indptr[a + 1]):
            row = indices[i] * nd
            for j in range(indptr[b], indptr[b + 1]):
                t = row + indices[j]
                if parent[t] != -2:
                    continue
                parent[t] = s
                if t == goal:
                    found = True
                    break
                queue[qt] = t
                qt += 1
            if found:
                break
    if not found:
        return None
    alpha = []
    beta = []
    t = goal
    while t != -1:
        alpha.append(t // nd)
        beta.append(t % nd)
        t = parent[t]
    alpha.reverse()
    beta.reverse()
    return alpha, beta
