import pytest
from hypothesis import given, settings

from conftest import graphs
from onepo.graph import GraphError, build_graph, complement, contract, delete_vertex
from onepo.oracles import is_1po_2sat
from onepo.patterns import (
    MinorModel,
    catalog,
    complete,
    contains,
    cycle,
    f1,
    f1_grid_model,
    f2,
    f3,
    f4,
    find_containment,
    k23,
    k23_plus,
    pattern,
    verify_model,
)
from onepo.workbench.enumeration import canonical_key, is_isomorphic
from onepo.workbench.generators import grid


def induced_minors(g):
    """Canonical keys of every induced minor of g, by closing under deletion and contraction."""
    seen = {canonical_key(g): g}
    stack = [g]
    while stack:
        cur = stack.pop()
        kids = [delete_vertex(cur, v) for v in range(cur.n)] if cur.n > 1 else []
        kids += [contract(cur, u, v) for u, v in cur.edges()]
        for k in kids:
            key = canonical_key(k)
            if key not in seen:
                seen[key] = k
                stack.append(k)
    return set(seen)


def minors(g):
    """Canonical keys of every minor of g (edge deletions allowed too)."""
    seen = {canonical_key(g): g}
    stack = [g]
    while stack:
        cur = stack.pop()
        kids = [delete_vertex(cur, v) for v in range(cur.n)] if cur.n > 1 else []
        kids += [contract(cur, u, v) for u, v in cur.edges()]
        kids += [build_graph(cur.n, [e for e in cur.edges() if e != f]) for f in cur.edges()]
        for k in kids:
            key = canonical_key(k)
            if key not in seen:
                seen[key] = k
                stack.append(k)
    return set(seen)


def test_catalog_names_unique_and_constructions():
    names = [p.name for p in catalog()]
    assert len(names) == len(set(names))
    assert (f1().n, f1().m) == (6, 7)
    assert (f2().n, f2().m) == (7, 8)
    g = f3(3)
    assert g.n == 6 and all(g.degree(v) == 3 for v in range(6))
    assert is_isomorphic(f4(1), k23())
    assert f4(2).n == 7
    with pytest.raises(GraphError):
        f3(2)
    assert k23_plus().has_edge(0, 1) and not k23().has_edge(0, 1)
    assert pattern("F3_5").n == 10
    with pytest.raises(KeyError):
        pattern("F99")


def test_catalog_soundness():
    # obstruction patterns are not 1-p.o.; C4, K4 and K2,3+ are
    skip = {"C4", "K4", "K2_3_plus", "F13", "F14", "F15"}
    for p in catalog():
        assert bool(is_1po_2sat(p.graph)) == (p.name in skip), p.name


def test_verify_model_examples():
    k4 = complete(4)
    ident = MinorModel.of({i: [i] for i in range(4)})
    assert verify_model(k4, k4, ident, "minor") and verify_model(k4, k4, ident, "induced")
    singletons = MinorModel.of({i: [i] for i in range(5)})
    assert verify_model(k23_plus(), k23(), singletons, "minor")
    assert not verify_model(k23_plus(), k23(), singletons, "induced")
    assert verify_model(grid(6), f1(), f1_grid_model(), "induced")


def test_verify_model_malformed():
    k4 = complete(4)
    with pytest.raises(GraphError):
        verify_model(k4, k4, MinorModel.of({0: [0], 1: [1], 2: [2]}))
    with pytest.raises(GraphError):
        verify_model(k4, k4, MinorModel.of({0: [0], 1: [1], 2: [2], 3: []}))
    with pytest.raises(GraphError):
        verify_model(k4, k4, MinorModel.of({0: [0], 1: [1], 2: [2], 3: [9]}))
    # overlapping or disconnected sets are well formed but invalid
    assert not verify_model(k4, k4, MinorModel.of({0: [0], 1: [0], 2: [2], 3: [3]}))
    c5 = cycle(5)
    assert not verify_model(c5, complete(3), MinorModel.of({0: [0, 2], 1: [1], 2: [3, 4]}))


def test_find_containment_examples():
    assert find_containment(cycle(6), k23(), "induced") is None
    assert find_containment(k23_plus(), complete(4), "minor") is None
    m = find_containment(k23_plus(), k23(), "minor")
    assert m is not None and verify_model(k23_plus(), k23(), m, "minor")
    m = find_containment(f2(), cycle(4), "induced")
    assert m is not None and verify_model(f2(), cycle(4), m, "induced")
    m = find_containment(grid(3), complete(4), "minor")
    assert m is not None and verify_model(grid(3), complete(4), m, "minor")
    assert find_containment(grid(3), complete(4), "induced") is not None


SMALL_PATTERNS = [cycle(4), complete(4), k23(), k23_plus(), f1(), complete(3), cycle(5)]


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6, connected=True))
def test_containment_against_closure(g):
    ims, ms = induced_minors(g), minors(g)
    for h in SMALL_PATTERNS:
        ind = find_containment(g, h, "induced")
        assert (ind is not None) == (canonical_key(h) in ims)
        if ind is not None:
            assert verify_model(g, h, ind, "induced")
            # an induced model is also a minor model
            assert verify_model(g, h, ind, "minor")
        mn = find_containment(g, h, "minor")
        assert (mn is not None) == (canonical_key(h) in ms)
        if h.m == h.n * (h.n - 1) // 2:
            assert (ind is None) == (mn is None)


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=5, max_n=10, connected=True))
def test_returned_models_verify(g):
    for name in ("K2_3", "F1", "K4"):
        m = find_containment(g, pattern(name), "induced")
        if m is not None:
            assert verify_model(g, pattern(name), m, "induced")


def test_containment_under_complement_sanity():
    # complement of C6 (the smallest F3) has F3_3 and nothing smaller from the non-1-p.o. list
    g = complement(cycle(6))
    assert contains(g, pattern("F3_3"))
    assert not contains(g, k23())


@pytest.mark.parametrize("name", [f"F{i}" for i in range(5, 11)])
def test_reconstructed_cobipartite_patterns_are_minimal(name):
    import networkx as nx
    from conftest import to_nx
    g = pattern(name)
    assert nx.is_bipartite(to_nx(complement(g)))
    assert not is_1po_2sat(g)
    assert all(is_1po_2sat(delete_vertex(g, v)) for v in range(g.n))
    assert all(is_1po_2sat(contract(g, u, v)) for u, v in g.edges())


def test_unfilled_slots():
    names = {p.name for p in catalog()}
    assert "F11" not in names and "F12" not in names
