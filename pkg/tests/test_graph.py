import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs, to_nx
from onepo.graph import (
    GraphError,
    blocks_and_cut_vertices,
    build_graph,
    chordless_cycles,
    complement,
    contract,
    delete_vertex,
    induce,
    paste,
    rooted_tree_orientation,
    transform,
)
from onepo.patterns import complete, cycle, f1, path
from onepo.workbench.enumeration import is_isomorphic


def test_build_graph_rejects_bad_input():
    with pytest.raises(GraphError):
        build_graph(3, [(0, 3)])
    with pytest.raises(GraphError):
        build_graph(3, [(1, 1)])
    assert build_graph(3, [(0, 1), (1, 0)]).m == 1


def test_transforms():
    g = cycle(4)
    assert complement(g).m == 2
    assert induce(g, [0, 1, 2]) == path(3)
    assert delete_vertex(g, 0) == path(3)
    assert contract(g, 0, 1) == complete(3)
    assert transform(g, "complement") == complement(g)
    with pytest.raises(GraphError):
        contract(g, 0, 2)


def test_paste_examples():
    bowtie = paste(complete(3), [0], complete(3), [0])
    assert (bowtie.n, bowtie.m) == (5, 6)
    assert blocks_and_cut_vertices(bowtie).cut_vertices == (0,)
    assert is_isomorphic(paste(cycle(4), [0, 1], cycle(4), [0, 1]), f1())
    with pytest.raises(GraphError):
        paste(cycle(4), [0, 2], cycle(4), [0, 1])
    with pytest.raises(GraphError):
        paste(cycle(4), [0, 1], cycle(4), [0])


def test_blocks_examples():
    dec = blocks_and_cut_vertices(path(4))
    assert sorted(dec.blocks) == [(0, 1), (1, 2), (2, 3)]
    assert dec.cut_vertices == (1, 2)
    assert blocks_and_cut_vertices(build_graph(1)).blocks == ((0,),)
    with pytest.raises(GraphError):
        blocks_and_cut_vertices(build_graph(2))


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9, connected=True))
def test_blocks_against_networkx(g):
    dec = blocks_and_cut_vertices(g)
    h = to_nx(g)
    if g.n > 1:
        expect = sorted(tuple(sorted(c)) for c in nx.biconnected_components(h))
        assert sorted(dec.blocks) == expect
    assert set(dec.cut_vertices) == set(nx.articulation_points(h))
    # edges partition across blocks; block tree is a tree on |B| + |C| nodes
    assert sum(induce(g, b).m for b in dec.blocks) == g.m
    tree, labels, nb = dec.block_tree()
    assert tree.n == len(dec.blocks) + len(dec.cut_vertices) == len(labels)
    assert tree.m == tree.n - 1 and tree.is_connected()


def test_rooted_tree_orientation():
    star = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    r = rooted_tree_orientation(star, 0)
    assert r.parent == {1: 0, 2: 0, 3: 0}
    r = rooted_tree_orientation(path(3), 0)
    assert r.parent == {1: 0, 2: 1}
    with pytest.raises(GraphError):
        rooted_tree_orientation(cycle(3), 0)
    with pytest.raises(GraphError):
        rooted_tree_orientation(build_graph(3, [(0, 1)]), 0)


def test_chordless_cycles_examples():
    assert chordless_cycles(cycle(5)) == [(0, 1, 2, 3, 4)]
    assert len(chordless_cycles(complete(4))) == 4
    assert sorted(map(len, chordless_cycles(f1()))) == [4, 4]
    assert chordless_cycles(path(5)) == []


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_chordless_cycles_against_networkx(g):
    ours = chordless_cycles(g)
    assert len(ours) == len(set(ours))
    key = lambda c: tuple(sorted(c))
    assert sorted(map(key, ours)) == sorted(map(key, nx.chordless_cycles(to_nx(g))))
    for c in ours:
        assert c[0] == min(c) and c[1] < c[-1]
