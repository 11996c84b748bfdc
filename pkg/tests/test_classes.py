import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs, to_nx
from onepo.classes import (
    CLASS_RECOGNIZERS,
    EliminationOrdering,
    is_2tree,
    is_block_cactus,
    is_chordal,
    is_cyclically_orientable,
    is_hollowed_2tree,
    is_k4_minor_free,
    is_outerplanar,
    peo_starting_at,
    separability_at_most_2,
)
from onepo.graph import GraphError, blocks_and_cut_vertices, build_graph, chordless_cycles, paste
from onepo.patterns import complete, contains, cycle, f1, k23, path
from onepo.workbench.enumeration import enumerate_connected
from onepo.workbench.generators import SplitMix64, grid, two_tree

K4_MINUS = build_graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])  # K4 minus {0,3}


def nx_outerplanar(g):
    # outerplanar iff adding a universal apex keeps the graph planar
    h = to_nx(g)
    h.add_edges_from(("apex", v) for v in range(g.n))
    return nx.check_planarity(h)[0]


def nx_sep2(g):
    h = to_nx(g)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v) and nx.has_path(h, u, v):
                if nx.node_connectivity(h, u, v) > 2:
                    return False
    return True


def test_chordal_examples():
    assert is_chordal(cycle(4)) is None
    assert is_chordal(K4_MINUS).is_valid_for(K4_MINUS)
    g = two_tree(9, SplitMix64(3))
    assert is_chordal(g).is_valid_for(g)
    assert is_chordal(build_graph(1)) is not None


def test_peo_starting_at_examples():
    assert peo_starting_at(complete(3), 2).construction_order[0] == 2
    e = peo_starting_at(K4_MINUS, 0)
    assert e.is_valid_for(K4_MINUS) and e.construction_order[0] == 0
    e = peo_starting_at(path(4), 1)
    assert e.is_valid_for(path(4)) and e.construction_order[0] == 1
    with pytest.raises(GraphError):
        peo_starting_at(cycle(4), 0)


def test_two_tree_examples():
    t = is_2tree(complete(3))
    assert len(t.removed) == 1 and t.residue.m == 1 and t.residue.n == 2
    assert is_2tree(cycle(4)) is None
    assert is_2tree(build_graph(1)) is None
    assert is_2tree(complete(2)) is not None


def test_hollowed_examples():
    t = is_hollowed_2tree(cycle(4))
    assert len(t.removed) == 0 and t.residue.n == 4
    g = build_graph(5, cycle(4).edges() + [(0, 4), (1, 4)])
    assert len(is_hollowed_2tree(g).removed) == 1
    assert is_hollowed_2tree(two_tree(7, SplitMix64(1))) is None
    assert is_hollowed_2tree(build_graph(1)) is None


def test_trace_replays():
    g = build_graph(6, cycle(4).edges() + [(0, 4), (1, 4), (1, 5), (4, 5)])
    t = is_hollowed_2tree(g)
    assert t.replay(g.n) == g


def test_k4_minor_free_examples():
    assert not is_k4_minor_free(complete(4))
    assert is_k4_minor_free(two_tree(10, SplitMix64(5)))
    assert not is_k4_minor_free(grid(6))
    assert contains(grid(3), complete(4), "minor")


def test_outerplanar_examples():
    assert is_outerplanar(cycle(5))
    assert not is_outerplanar(k23())
    assert is_outerplanar(K4_MINUS)


def test_block_cactus_examples():
    bowtie = paste(complete(3), [0], complete(3), [0])
    assert is_block_cactus(bowtie)
    assert not is_block_cactus(build_graph(5, cycle(5).edges() + [(0, 2)]))
    assert is_block_cactus(complete(2))
    with pytest.raises(GraphError):
        is_block_cactus(build_graph(2))


def test_separability_examples():
    assert not separability_at_most_2(k23())
    assert separability_at_most_2(cycle(6))
    assert separability_at_most_2(paste(cycle(5), [0, 1], cycle(6), [2, 3]))


def test_cyclically_orientable_examples():
    assert not is_cyclically_orientable(complete(4))
    assert is_cyclically_orientable(cycle(4))
    assert is_cyclically_orientable(f1())


def test_k1_conventions():
    k1 = build_graph(1)
    assert is_2tree(k1) is None and is_hollowed_2tree(k1) is None
    for name in ("chordal", "k4mf", "outerplanar", "blockcactus", "sep2", "co"):
        assert CLASS_RECOGNIZERS[name](k1), name


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=9))
def test_against_networkx(g):
    assert (is_chordal(g) is not None) == nx.is_chordal(to_nx(g))
    assert is_outerplanar(g) == nx_outerplanar(g)
    assert separability_at_most_2(g) == nx_sep2(g)
    peo = is_chordal(g)
    if peo is not None:
        assert peo.is_valid_for(g)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=7))
def test_k4_minor_free_against_search(g):
    assert is_k4_minor_free(g) == (not contains(g, complete(4), "minor"))


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8, connected=True), st.randoms(use_true_random=False))
def test_reductions_order_independent(g, rnd):
    choose = lambda cands: rnd.choice(sorted(cands))
    assert (is_2tree(g) is None) == (is_2tree(g, choose) is None)
    assert (is_hollowed_2tree(g) is None) == (is_hollowed_2tree(g, choose) is None)


@pytest.mark.parametrize("n", range(2, 9))
def test_biconnected_k4mf_chordal_iff_2tree(n):
    def within(g):
        return is_k4_minor_free(g)
    for g in enumerate_connected(n, within):
        if len(blocks_and_cut_vertices(g).blocks) != 1:
            continue
        assert (is_chordal(g) is not None) == (is_2tree(g) is not None)
        if is_hollowed_2tree(g) is not None:
            assert sum(len(c) >= 4 for c in chordless_cycles(g)) == 1


@pytest.mark.parametrize("n", range(1, 9))
def test_order_independence_exhaustive(n):
    rnd = random.Random(n)
    choose = lambda cands: rnd.choice(sorted(cands))
    for g in enumerate_connected(n, is_k4_minor_free):
        assert (is_2tree(g) is None) == (is_2tree(g, choose) is None)
        assert (is_hollowed_2tree(g) is None) == (is_hollowed_2tree(g, choose) is None)
