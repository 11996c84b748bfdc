import networkx as nx
import pytest
from hypothesis import strategies as st

from onepo.graph import build_graph


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@st.composite
def graphs(draw, min_n=1, max_n=7, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [p for p, keep in zip(pairs, mask) if keep]
    if connected:
        # thread a random spanning tree through the vertices
        for v in range(1, n):
            u = draw(st.integers(0, v - 1))
            edges.append((u, v))
    return build_graph(n, edges)


@pytest.fixture(scope="session")
def connected_upto6():
    from onepo.workbench.enumeration import enumerate_connected_upto
    return list(enumerate_connected_upto(6))
