"""Recognisers for the auxiliary graph classes the main theorems range over."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .graph import Graph, GraphError, blocks_and_cut_vertices, induce


@dataclass(frozen=True)
class EliminationOrdering:
    """A perfect elimination ordering: later neighbours of each vertex form a clique.

    ``construction_order`` is the reverse sequence, in which every vertex's
    earlier neighbours form a clique; orienting each edge from the later to
    the earlier vertex of that sequence is a 1-perfect orientation whose
    unique sink is ``construction_order[0]``.
    """

    order: tuple[int, ...]

    @property
    def construction_order(self) -> tuple[int, ...]:
        return self.order[::-1]

    def is_valid_for(self, g: Graph) -> bool:
        if sorted(self.order) != list(range(g.n)):
            return False
        pos = {v: i for i, v in enumerate(self.order)}
        return all(g.is_clique([w for w in g.adj[v] if pos[w] > pos[v]]) for v in self.order)


@dataclass(frozen=True)
class ReductionTrace:
    """Simplicial degree-2 removals, in removal order, plus what was left.

    ``residue_vertices`` are the original labels of the residue graph's
    vertices (residue vertex ``i`` is ``residue_vertices[i]``).
    """

    removed: tuple[tuple[int, tuple[int, int]], ...]
    residue: Graph
    residue_vertices: tuple[int, ...]

    def replay(self, n: int) -> Graph:
        """Rebuild the original graph on ``n`` vertices by re-adding the removed vertices."""
        from .graph import build_graph

        rv = self.residue_vertices
        edges = [(rv[a], rv[b]) for a, b in self.residue.edges()]
        for v, (a, b) in reversed(self.removed):
            edges += [(v, a), (v, b)]
        return build_graph(n, edges)


# --- chordal graphs ----------------------------------------------------------

def is_chordal(g: Graph) -> Optional[EliminationOrdering]:
    """Maximum cardinality search; the reversed visit order is tested as a PEO."""
    weight = [0] * g.n
    visited = [False] * g.n
    visit = []
    for _ in range(g.n):
        v = max((u for u in range(g.n) if not visited[u]), key=lambda u: (weight[u], -u))
        visited[v] = True
        visit.append(v)
        for w in g.adj[v]:
            if not visited[w]:
                weight[w] += 1
    peo = EliminationOrdering(tuple(reversed(visit)))
    return peo if peo.is_valid_for(g) else None


def _simplicial(g_nbrs, v):
    nb = list(g_nbrs[v])
    return all(b in g_nbrs[a] for a, b in combinations(nb, 2))


def peo_starting_at(g: Graph, v: int) -> EliminationOrdering:
    """Elimination ordering that deletes ``v`` last (so construction starts at ``v``).

    Repeatedly removes the lowest-indexed simplicial vertex other than ``v``.
    """
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} not in graph")
    if not g.is_connected():
        raise GraphError("peo_starting_at requires a connected graph")
    nbrs = {u: set(g.adj[u]) for u in range(g.n)}
    order = []
    while len(nbrs) > 1:
        pick = next((u for u in sorted(nbrs) if u != v and _simplicial(nbrs, u)), None)
        if pick is None:
            raise GraphError("graph is not chordal")
        order.append(pick)
        for w in nbrs.pop(pick):
            nbrs[w].discard(pick)
    order.append(v)
    return EliminationOrdering(tuple(order))


# --- 2-trees and hollowed 2-trees --------------------------------------------

def simplicial_degree2_reduction(g: Graph, choose=min) -> ReductionTrace:
    """Strip simplicial degree-2 vertices until none is left.

    ``choose`` picks among the eligible vertices (default: lowest index);
    the tests use random choices to check that the verdicts do not depend
    on it.
    """
    nbrs = {u: set(g.adj[u]) for u in range(g.n)}
    eligible = {u for u in nbrs if len(nbrs[u]) == 2 and _simplicial(nbrs, u)}
    removed = []
    while eligible:
        v = choose(sorted(eligible))
        eligible.discard(v)
        a, b = sorted(nbrs.pop(v))
        removed.append((v, (a, b)))
        for w in (a, b):
            nbrs[w].discard(v)
            if len(nbrs[w]) == 2 and _simplicial(nbrs, w):
                eligible.add(w)
            else:
                eligible.discard(w)
    rest = tuple(sorted(nbrs))
    return ReductionTrace(tuple(removed), induce(g, rest), rest)


def _is_k2(r: Graph) -> bool:
    return r.n == 2 and r.m == 1


def _is_long_cycle(r: Graph) -> bool:
    return r.n >= 4 and r.m == r.n and r.is_connected() and all(r.degree(v) == 2 for v in r.vertices())


def is_2tree(g: Graph, choose=min) -> Optional[ReductionTrace]:
    trace = simplicial_degree2_reduction(g, choose)
    return trace if _is_k2(trace.residue) else None


def is_hollowed_2tree(g: Graph, choose=min) -> Optional[ReductionTrace]:
    trace = simplicial_degree2_reduction(g, choose)
    return trace if _is_long_cycle(trace.residue) else None


# --- minor-closed classes ----------------------------------------------------

def is_k4_minor_free(g: Graph) -> bool:
    """Series-parallel reduction: drop degree <= 1 vertices, suppress degree-2 vertices."""
    nbrs = {u: set(g.adj[u]) for u in range(g.n)}
    queue = [u for u in nbrs if len(nbrs[u]) <= 2]
    while queue:
        v = queue.pop()
        if v not in nbrs or len(nbrs[v]) > 2:
            continue
        nb = nbrs.pop(v)
        for w in nb:
            nbrs[w].discard(v)
        if len(nb) == 2:
            a, b = nb
            nbrs[a].add(b)
            nbrs[b].add(a)
        queue.extend(w for w in nb if len(nbrs[w]) <= 2)
    return not nbrs


def is_outerplanar(g: Graph) -> bool:
    """Per-block degree-2 reduction that counts the triangles glued onto each edge.

    Removing a degree-2 vertex v with neighbours u, w glues the triangle uvw
    onto uw. In an outerplanar block every edge borders at most two faces, so
    no edge may carry more than two triangles; a block that gets stuck before
    shrinking to one edge has a K4 minor.
    """
    for comp in g.components():
        h = induce(g, sorted(comp))
        for block in blocks_and_cut_vertices(h).blocks:
            if len(block) > 2 and not _outerplanar_block(induce(h, block)):
                return False
    return True


def _outerplanar_block(b: Graph) -> bool:
    nbrs = {u: set(b.adj[u]) for u in range(b.n)}
    glued = {}
    key = lambda x, y: (x, y) if x < y else (y, x)
    queue = [u for u in nbrs if len(nbrs[u]) == 2]
    while len(nbrs) > 2:
        while queue and (queue[-1] not in nbrs or len(nbrs[queue[-1]]) != 2):
            queue.pop()
        if not queue:
            return False
        v = queue.pop()
        u, w = nbrs.pop(v)
        if glued.get(key(u, v), 0) > 1 or glued.get(key(v, w), 0) > 1:
            return False
        uw = key(u, w)
        glued[uw] = glued.get(uw, 0) + 1
        if glued[uw] > 2:
            return False
        for x, y in ((u, w), (w, u)):
            nbrs[x].discard(v)
            nbrs[x].add(y)
            if len(nbrs[x]) == 2:
                queue.append(x)
    return True


def is_block_cactus(g: Graph) -> bool:
    if not g.is_connected():
        raise GraphError("block-cactus test requires a connected graph")
    for block in blocks_and_cut_vertices(g).blocks:
        b = induce(g, block)
        if not (b.m == b.n * (b.n - 1) // 2 or _is_cycle(b)):
            return False
    return True


def _is_cycle(b: Graph) -> bool:
    return b.n >= 3 and b.m == b.n and all(b.degree(v) == 2 for v in b.vertices())


def separability_at_most_2(g: Graph) -> bool:
    """Every non-adjacent pair in a common component is split by at most 2 other vertices.

    Brute force over all separator candidates of size at most 2.
    """
    n = g.n
    comp_of = {}
    for i, comp in enumerate(g.components()):
        for v in comp:
            comp_of[v] = i
    need = {(u, v) for u, v in combinations(range(n), 2)
            if comp_of[u] == comp_of[v] and not g.has_edge(u, v)}
    if not need:
        return True
    candidates = [()] + [(x,) for x in range(n)] + list(combinations(range(n), 2))
    for removed in candidates:
        gone = set(removed)
        label = {}
        for s in range(n):
            if s in gone or s in label:
                continue
            label[s] = s
            stack = [s]
            while stack:
                x = stack.pop()
                for w in g.adj[x]:
                    if w not in gone and w not in label:
                        label[w] = s
                        stack.append(w)
        need = {(u, v) for u, v in need if u in gone or v in gone or label[u] == label[v]}
        if not need:
            return True
    return False


def has_k4_clique(g: Graph) -> bool:
    for u, v in g.edges():
        common = sorted(g.neighbors(u) & g.neighbors(v))
        if any(g.has_edge(a, b) for a, b in combinations(common, 2)):
            return True
    return False


def is_cyclically_orientable(g: Graph) -> bool:
    return not has_k4_clique(g) and separability_at_most_2(g)


CLASS_RECOGNIZERS = {
    "chordal": lambda g: is_chordal(g) is not None,
    "2tree": lambda g: is_2tree(g) is not None,
    "h2tree": lambda g: is_hollowed_2tree(g) is not None,
    "k4mf": is_k4_minor_free,
    "outerplanar": is_outerplanar,
    "blockcactus": is_block_cactus,
    "sep2": separability_at_most_2,
    "co": is_cyclically_orientable,
}
