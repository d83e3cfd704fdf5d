"""Both kernel backends against each other and against brute force."""

import os

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dartdig import build_dart_digraph, complete, cycle, kernels, petersen, random_min_degree3

from conftest import graphs
from oracles import min_equal_length, mutual_reachability_classes, underlying_bipartite

BACKENDS = kernels.available_backends()


@pytest.mark.skipif(os.environ.get("DARTDIG_PURE_PYTHON") == "1", reason="fallback forced")
def test_compiled_backend_present():
    # the extension is built by `pip install -e .`; fail loudly if it silently vanished
    assert kernels.compiled_backend is not None
    assert kernels.BACKEND == "cython"


def _as_list(labels):
    return labels.tolist() if hasattr(labels, "tolist") else list(labels)


@st.composite
def digraphs(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    rows = [sorted(draw(st.sets(st.integers(0, n - 1), max_size=3))) for _ in range(n)]
    indptr = [0]
    for r in rows:
        indptr.append(indptr[-1] + len(r))
    return n, rows, indptr, [w for r in rows for w in r]


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.BACKEND)
@given(dg=digraphs())
def test_scc_csr_matches_pairwise_bfs(backend, dg):
    n, rows, indptr, indices = dg
    labels, count = backend.scc_csr(indptr, indices, n)
    labels = _as_list(labels)
    classes = mutual_reachability_classes(n, rows.__getitem__)
    assert count == len(classes)
    for k, cls in enumerate(classes):
        assert {labels[v] for v in cls} == {k}


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.BACKEND)
@given(dg=digraphs())
def test_bipartite_csr_matches_oracle(backend, dg):
    n, rows, indptr, indices = dg
    preds = [[] for _ in range(n)]
    for v, r in enumerate(rows):
        for w in r:
            preds[w].append(v)
    rindptr = [0]
    for p in preds:
        rindptr.append(rindptr[-1] + len(p))
    rindices = [v for p in preds for v in p]
    arcs = [(v, w) for v, r in enumerate(rows) for w in r]
    got = backend.bipartite_csr(indptr, indices, rindptr, rindices, n)
    assert got == underlying_bipartite(n, arcs)


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.BACKEND)
@given(g=graphs(max_n=6))
@settings(max_examples=40, deadline=None)
def test_a2d_kernels_match_explicit(backend, g):
    if not 0 < g.num_darts <= 20:
        return
    dd = build_dart_digraph(g)
    nd = dd.num_vertices
    succ = lambda p: [(p % nd) * nd + w for w in dd.out_adj[p // nd]]
    labels, count = backend.scc_a2d(dd.indptr, dd.indices, nd)
    labels = _as_list(labels)
    classes = mutual_reachability_classes(nd * nd, succ)
    assert count == len(classes)
    for k, cls in enumerate(classes):
        assert {labels[v] for v in cls} == {k}
    arcs = [(p, q) for p in range(nd * nd) for q in succ(p)]
    assert backend.bipartite_a2d(dd.indptr, dd.indices, dd.rindptr, dd.rindices, nd) == underlying_bipartite(nd * nd, arcs)


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.BACKEND)
@pytest.mark.parametrize("g", [complete(4), cycle(5), petersen(), random_min_degree3(7, 3)], ids=["K4", "C5", "petersen", "random7"])
def test_product_bfs_minimal(backend, g):
    dd = build_dart_digraph(g)
    nd = dd.num_vertices
    for x in range(0, nd, 3):
        for y in range(1, nd, 4):
            for w, z in ((0, nd - 1), (x, y), (nd // 2, 1)):
                got = backend.product_bfs(dd.indptr, dd.indices, nd, x, y, w, z)
                k = min_equal_length(dd.successors, nd, x, w, y, z)
                if k is None:
                    assert got is None
                    continue
                alpha, beta = got
                assert len(alpha) == len(beta) == k + 1
                assert (alpha[0], alpha[-1], beta[0], beta[-1]) == (x, w, y, z)
                for s, t in zip(alpha, alpha[1:]):
                    assert t in dd.successors(s)
                for s, t in zip(beta, beta[1:]):
                    assert t in dd.successors(s)


def test_backends_agree_on_large_a2d():
    g = random_min_degree3(14, 11)
    dd = build_dart_digraph(g)
    results = [b.scc_a2d(dd.indptr, dd.indices, dd.num_vertices) for b in BACKENDS]
    assert len({(tuple(_as_list(l)), c) for l, c in results}) == 1


def test_fallback_selected_by_environment():
    import subprocess
    import sys

    code = (
        "import dartdig, dartdig.kernels as k;"
        "g = dartdig.petersen();"
        "w = dartdig.a2d_witness_walk(g, (0, 1), (7, 20));"
        "print(k.BACKEND, dartdig.validate_walk_in_a2d(g, w))"
    )
    env = dict(os.environ, DARTDIG_PURE_PYTHON="1")
    proc = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert proc.stdout.split() == ["python", "True"], proc.stderr
