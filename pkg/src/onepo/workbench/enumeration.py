"""Canonical labelling and isomorph-free enumeration of small connected graphs."""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterator, Optional

from ..graph import Graph, GraphError, build_graph

MAX_BUILTIN_N = 9


def _refine(masks, colors):
    """Refine a vertex colouring to the coarsest equitable one.

    New colours are ranks of ``(old colour, sorted neighbour colours)``
    signatures, so the result does not depend on vertex labels.
    """
    n = len(masks)
    ncolors = len(set(colors))
    while True:
        sigs = []
        for v in range(n):
            m = masks[v]
            nc = []
            while m:
                low = m & -m
                nc.append(colors[low.bit_length() - 1])
                m ^= low
            nc.sort()
            sigs.append((colors[v], tuple(nc)))
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [ranks[s] for s in sigs]
        if len(ranks) == ncolors:
            return colors
        ncolors = len(ranks)


def _code(masks, order):
    """Upper-triangle adjacency bits of the graph relabelled by ``order``."""
    pos = {v: i for i, v in enumerate(order)}
    n = len(order)
    code = 0
    for j in range(1, n):
        mj = masks[order[j]]
        for i in range(j):
            code = (code << 1) | ((mj >> order[i]) & 1)
    return code


def canonical_order(g: Graph) -> list[int]:
    """Vertex order whose relabelling is the same for every isomorphic copy.

    Individualisation-refinement: refine, branch on the first smallest
    non-singleton cell, keep the leaf with the largest adjacency code.
    Twins inside a cell are interchangeable, so only one per twin class
    is branched on.
    """
    n = g.n
    if n <= 1:
        return list(range(n))
    masks = [sum(1 << w for w in g.adj[v]) for v in range(n)]
    best = [None, None]

    def search(colors):
        colors = _refine(masks, colors)
        k = max(colors) + 1
        if k == n:
            order = sorted(range(n), key=colors.__getitem__)
            code = _code(masks, order)
            if best[0] is None or code > best[0]:
                best[0], best[1] = code, order
            return
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = min((c for c in cells if len(cells[c]) > 1), key=lambda c: (len(cells[c]), c))
        cell = cells[target]
        reps = []
        for v in cell:
            if not any(_twins(masks, v, r) for r in reps):
                reps.append(v)
        for v in reps:
            # individualise v: give it a colour just below its cell
            new = [2 * c + 1 for c in colors]
            new[v] = 2 * target
            search(new)

    search([0] * n)
    return best[1]


def _twins(masks, a, b):
    bit = (1 << a) | (1 << b)
    return (masks[a] & ~bit) == (masks[b] & ~bit)


def canonical_form(g: Graph) -> Graph:
    order = canonical_order(g)
    pos = {v: i for i, v in enumerate(order)}
    return build_graph(g.n, ((pos[u], pos[v]) for u, v in g.edges()))


def canonical_key(g: Graph) -> tuple[int, int]:
    """Hashable certificate: equal keys iff the graphs are isomorphic."""
    masks = [sum(1 << w for w in g.adj[v]) for v in range(g.n)]
    return g.n, _code(masks, canonical_order(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_key(g) == canonical_key(h)


@lru_cache(maxsize=None)
def _connected_layer(n: int, within: Optional[Callable[[Graph], bool]]) -> tuple[Graph, ...]:
    if n == 1:
        return (build_graph(1),)
    out = {}
    # every connected graph has a vertex whose deletion leaves it connected
    for g in _connected_layer(n - 1, within):
        for subset in range(1, 1 << (n - 1)):
            edges = g.edges() + [(v, n - 1) for v in range(n - 1) if subset >> v & 1]
            h = build_graph(n, edges)
            key = canonical_key(h)
            if key in out:
                continue
            if within is not None and not within(h):
                continue
            out[key] = canonical_form(h)
    return tuple(out[k] for k in sorted(out))


def enumerate_connected(n: int, within: Optional[Callable[[Graph], bool]] = None) -> Iterator[Graph]:
    """Yield each connected graph on ``n`` vertices once per isomorphism class.

    Graphs come canonically labelled, in canonical-code order.  ``within``
    restricts the enumeration to a class; it must be closed under deleting
    non-cut vertices (K4-minor-free and outerplanar graphs qualify), since
    the search only grows graphs that already lie in the class.
    """
    if n < 1:
        return iter(())
    if n > MAX_BUILTIN_N:
        raise GraphError(f"built-in enumeration stops at n={MAX_BUILTIN_N}; ingest a graph6 corpus instead")
    return iter(_connected_layer(n, within))


def enumerate_connected_upto(n_max: int, within=None) -> Iterator[Graph]:
    for n in range(1, n_max + 1):
        yield from enumerate_connected(n, within)
