import pytest
from hypothesis import strategies as st

from dartdig import Graph, complete, complete_bipartite, cycle, petersen, random_min_degree3


@pytest.fixture
def k4():
    return complete(4)


@pytest.fixture
def k33():
    return complete_bipartite(3, 3)


@pytest.fixture
def pet():
    return petersen()


@pytest.fixture
def c6():
    return cycle(6)


@st.composite
def graphs(draw, max_n=7):
    """Arbitrary simple graphs, isolated vertices allowed."""
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(n, chosen)


@st.composite
def theorem_graphs(draw, max_n=9):
    """Connected graphs with every valence >= 3."""
    n = draw(st.integers(4, max_n))
    seed = draw(st.integers(0, 2**32))
    return random_min_degree3(n, seed)
