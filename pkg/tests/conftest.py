import pytest
from hypothesis import settings, strategies as st

from vmcalc.graph import Graph

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 6) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(range(n), [p for p, b in zip(pairs, bits) if b])


@st.composite
def graph_and_vertex(draw, min_n: int = 1, max_n: int = 6):
    G = draw(graphs(min_n, max_n))
    return G, draw(st.sampled_from(G.vertices))


@st.composite
def graph_and_edge(draw, min_n: int = 2, max_n: int = 6):
    G = draw(graphs(min_n, max_n).filter(lambda g: g.m > 0))
    return G, draw(st.sampled_from(G.edges()))


@pytest.fixture
def c5() -> Graph:
    return Graph.cycle(5)
