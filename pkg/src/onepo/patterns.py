"""Forbidden-pattern catalog and the (induced) minor containment engine."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Optional

from .graph import Graph, GraphError, build_graph, complement, paste


@dataclass(frozen=True)
class Pattern:
    name: str
    graph: Graph


@dataclass(frozen=True)
class MinorModel:
    """Branch sets keyed by pattern vertex; each value is a sorted tuple of host vertices."""

    branch_sets: Mapping[int, tuple[int, ...]]

    @classmethod
    def of(cls, sets: Mapping[int, object]) -> "MinorModel":
        return cls({int(k): tuple(sorted(v)) for k, v in sorted(sets.items())})


# --- small named graphs ------------------------------------------------------

def cycle(k: int) -> Graph:
    if k < 3:
        raise GraphError("cycles need at least 3 vertices")
    return build_graph(k, ((i, (i + 1) % k) for i in range(k)))


def path(k: int) -> Graph:
    return build_graph(k, ((i, i + 1) for i in range(k - 1)))


def complete(k: int) -> Graph:
    return build_graph(k, ((i, j) for i in range(k) for j in range(i + 1, k)))


def complete_bipartite(a: int, b: int) -> Graph:
    return build_graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def k23() -> Graph:
    # 0, 1 are the degree-3 vertices
    return complete_bipartite(2, 3)


def k23_plus() -> Graph:
    return build_graph(5, k23().edges() + [(0, 1)])


def f1() -> Graph:
    """Two 4-cycles 0-2-3-1 and 0-4-5-1 sharing the edge 01."""
    return build_graph(6, [(0, 1), (0, 2), (2, 3), (3, 1), (0, 4), (4, 5), (5, 1)])


def f2() -> Graph:
    """Two 4-cycles 0-1-2-3 and 3-4-5-6 sharing vertex 3."""
    return build_graph(7, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (5, 6), (6, 3)])


def f3(k: int) -> Graph:
    """Complement of the even cycle C_{2k}, k >= 3."""
    if k < 3:
        raise GraphError("F3 family starts at k=3")
    return complement(cycle(2 * k))


def f4(k: int) -> Graph:
    """Complement of K2 + C_{2k+1}, k >= 1."""
    if k < 1:
        raise GraphError("F4 family starts at k=1")
    return complement(paste(complete(2), [], cycle(2 * k + 1), []))


# F5.. are complements of bipartite graphs.  The drawings they come from are
# not available, so these are computational reconstructions: every bipartite
# H on at most 11 vertices, other than an even cycle, whose complement is not
# 1-p.o. while each single vertex deletion and edge contraction of it is.
# There are exactly six, listed by (n, m, graph6) in canonical labelling;
# the slots F11 and F12 stay empty.
_FIG1_BIPARTITE: dict[str, tuple[int, tuple[tuple[int, int], ...]]] = {
    "F5": (9, ((0, 5), (1, 3), (1, 6), (2, 4), (2, 7), (3, 8), (4, 8), (5, 6), (5, 7), (6, 8), (7, 8))),
    "F6": (10, ((0, 3), (1, 4), (2, 5), (3, 6), (4, 7), (5, 8), (6, 9), (7, 9), (8, 9))),
    "F7": (10, ((0, 3), (1, 4), (2, 5), (3, 7), (4, 8), (5, 9), (6, 7), (6, 8), (7, 9), (8, 9))),
    "F8": (10, ((0, 3), (1, 6), (2, 7), (3, 9), (4, 6), (4, 9), (5, 7), (5, 9), (6, 8), (7, 8), (8, 9))),
    "F9": (10, ((0, 2), (1, 3), (2, 6), (3, 7), (4, 5), (4, 8), (5, 9), (6, 7), (6, 8), (7, 9), (8, 9))),
    "F10": (10, ((0, 4), (1, 5), (2, 3), (2, 8), (3, 9), (4, 6), (4, 8), (5, 7), (5, 9), (6, 7), (6, 9),
                 (7, 8), (8, 9))),
}


def f5_to_f12() -> dict[str, Graph]:
    return {name: complement(build_graph(n, edges)) for name, (n, edges) in _FIG1_BIPARTITE.items()}


def f13() -> Graph:
    """K2,3 plus one edge between two of its degree-2 vertices."""
    return build_graph(5, k23().edges() + [(2, 3)])


def f14() -> Graph:
    """The wheel W4: hub 0 on the 4-cycle 1-2-3-4."""
    return build_graph(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (4, 1)])


def f15() -> Graph:
    """K5 minus the edge 01."""
    return build_graph(5, [(u, v) for u in range(5) for v in range(u + 1, 5) if (u, v) != (0, 1)])


@lru_cache(maxsize=None)
def catalog() -> tuple[Pattern, ...]:
    """Named patterns with small family representatives (F3_3, F3_4, F4_1, F4_2).

    ``C4`` is included as the certificate of non-chordality.  Note that
    ``F4_1`` is isomorphic to ``K2_3``.
    """
    pats = [
        Pattern("C4", cycle(4)),
        Pattern("K4", complete(4)),
        Pattern("K2_3", k23()),
        Pattern("K2_3_plus", k23_plus()),
        Pattern("F1", f1()),
        Pattern("F2", f2()),
        Pattern("F3_3", f3(3)),
        Pattern("F3_4", f3(4)),
        Pattern("F4_1", f4(1)),
        Pattern("F4_2", f4(2)),
    ]
    pats += [Pattern(name, g) for name, g in f5_to_f12().items()]
    pats += [Pattern("F13", f13()), Pattern("F14", f14()), Pattern("F15", f15())]
    return tuple(pats)


def pattern(name: str) -> Graph:
    """Look up a pattern by its stable name; ``F3_k`` / ``F4_k`` accept any valid k."""
    for p in catalog():
        if p.name == name:
            return p.graph
    family, _, k = name.partition("_")
    if family in ("F3", "F4") and k.isdigit():
        return (f3 if family == "F3" else f4)(int(k))
    raise KeyError(f"unknown pattern {name!r}")


# --- models ------------------------------------------------------------------

def f1_grid_model(k: int = 6) -> MinorModel:
    """Induced-minor model of F1 in the k x k grid (vertex ``r * k + c``), k >= 6.

    The 6 x 6 corner is cut into two row bands (rows 0-2, 3-5) and three
    column bands (cols 0-1, 2-3, 4-5); the middle blocks play vertices 0
    and 1 of F1, the left blocks 2 and 3, the right blocks 4 and 5.
    """
    if k < 6:
        raise GraphError("the F1 model needs at least a 6 x 6 grid")
    block = lambda rows, cols: [r * k + c for r in rows for c in cols]
    top, bottom = range(0, 3), range(3, 6)
    left, mid, right = range(0, 2), range(2, 4), range(4, 6)
    return MinorModel.of({
        0: block(top, mid), 1: block(bottom, mid),
        2: block(top, left), 3: block(bottom, left),
        4: block(top, right), 5: block(bottom, right),
    })


def verify_model(g: Graph, h: Graph, model: MinorModel, mode: str = "induced") -> bool:
    """Check a (induced) minor model of ``h`` in ``g``.

    Raises :class:`GraphError` when the model is malformed (wrong keys,
    empty set, unknown vertex); returns ``False`` when it is well formed
    but violates disjointness, connectivity or the adjacency conditions.
    """
    if mode not in ("minor", "induced"):
        raise ValueError(f"unknown mode {mode!r}")
    sets = model.branch_sets
    if set(sets) != set(range(h.n)):
        raise GraphError("branch sets must be keyed exactly by the pattern vertices")
    owner = {}
    for a, s in sets.items():
        if not s:
            raise GraphError(f"branch set {a} is empty")
        for x in s:
            if not 0 <= x < g.n:
                raise GraphError(f"branch set {a} holds unknown vertex {x}")
            if x in owner:
                return False
            owner[x] = a
    if not all(g.is_connected_subset(s) for s in sets.values()):
        return False
    touching = set()
    for u, v in g.edges():
        a, b = owner.get(u), owner.get(v)
        if a is not None and b is not None and a != b:
            touching.add((min(a, b), max(a, b)))
    wanted = set(h.edges())
    if mode == "minor":
        return wanted <= touching
    return wanted == touching


def find_containment(g: Graph, h: Graph, mode: str = "induced") -> Optional[MinorModel]:
    """Search for a (induced) minor model of ``h`` in ``g``.

    Host vertices are assigned, in order of decreasing degree, to a branch
    set or left unused.  Pruning: adjacent host vertices in different sets
    must map to a pattern edge (induced mode), enough unassigned vertices
    must remain for the empty sets, every set must stay connectable through
    unassigned vertices, and every pattern edge must stay realisable.
    ``None`` means no model exists.  Meant for patterns of up to 8 vertices
    in hosts of up to 16.
    """
    if mode not in ("minor", "induced"):
        raise ValueError(f"unknown mode {mode!r}")
    k, n = h.n, g.n
    if k == 0:
        return MinorModel({})
    if k > n or h.m > g.m:
        return None
    induced = mode == "induced"
    nbm = [sum(1 << w for w in g.adj[v]) for v in range(n)]
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    slots = sorted(range(k), key=lambda a: (-h.degree(a), a))
    h_adj = [h.neighbors(a) for a in range(k)]
    h_edges = h.edges()
    sets = [0] * k
    state = {"unassigned": (1 << n) - 1, "empty": k}

    def reachable(start_mask, allowed):
        seen = start_mask & -start_mask
        frontier = seen
        while frontier:
            grow = 0
            m = frontier
            while m:
                low = m & -m
                grow |= nbm[low.bit_length() - 1]
                m ^= low
            frontier = grow & allowed & ~seen
            seen |= frontier
        return seen

    def feasible():
        free = state["unassigned"]
        for a in range(k):
            s = sets[a]
            if s and (reachable(s, s | free) & s) != s:
                return False
        for a, b in h_edges:
            sa, sb = sets[a] | free, sets[b] | free
            if not sets[a] and not sets[b]:
                continue
            m = sa
            touch = 0
            while m:
                low = m & -m
                touch |= nbm[low.bit_length() - 1]
                m ^= low
            if not touch & sb:
                return False
        return True

    label = [-1] * n

    def rec(i):
        if state["empty"] > n - i:
            return False
        if i == n:
            return True
        x = order[i]
        bit = 1 << x
        state["unassigned"] &= ~bit
        for a in slots + [-1]:
            if a >= 0 and induced:
                ok = True
                m = nbm[x] & ~state["unassigned"]
                while m:
                    low = m & -m
                    b = label[low.bit_length() - 1]
                    m ^= low
                    if b >= 0 and b != a and b not in h_adj[a]:
                        ok = False
                        break
                if not ok:
                    continue
            label[x] = a
            if a >= 0:
                if not sets[a]:
                    state["empty"] -= 1
                sets[a] |= bit
            if feasible() and rec(i + 1):
                return True
            if a >= 0:
                sets[a] &= ~bit
                if not sets[a]:
                    state["empty"] += 1
            label[x] = -1
        state["unassigned"] |= bit
        return False

    if not rec(0):
        return None
    model = MinorModel.of({a: [v for v in range(n) if sets[a] >> v & 1] for a in range(k)})
    if not verify_model(g, h, model, mode):
        raise AssertionError("containment search produced an invalid model")
    return model


def contains(g: Graph, h: Graph, mode: str = "induced") -> bool:
    return find_containment(g, h, mode) is not None
