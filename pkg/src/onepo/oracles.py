"""Ground-truth deciders for 1-perfect orientability.

Everything here works directly from the definition (or the classical 2-SAT
reduction) and knows nothing about the structural theory in
:mod:`onepo.structural`; that independence is what makes the crosschecks in
:mod:`onepo.workbench.crosscheck` meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .graph import Graph, GraphError, chordless_cycles


@dataclass(frozen=True)
class Orientation:
    """Direction for every edge of ``host``.

    ``dirs[i]`` refers to ``host.edges()[i] == (u, v)`` with ``u < v``;
    ``True`` means the arc ``u -> v``.
    """

    host: Graph
    dirs: tuple[bool, ...]

    def __post_init__(self):
        if len(self.dirs) != self.host.m:
            raise GraphError(f"orientation has {len(self.dirs)} directions for {self.host.m} edges")

    @classmethod
    def from_arcs(cls, host: Graph, arcs: Iterable[tuple[int, int]]) -> "Orientation":
        """Build from an arc list; every host edge must appear exactly once."""
        index = {e: i for i, e in enumerate(host.edges())}
        dirs: list[Optional[bool]] = [None] * len(index)
        for x, y in arcs:
            key = (min(x, y), max(x, y))
            if key not in index:
                raise GraphError(f"arc ({x}, {y}) is not a host edge")
            i = index[key]
            if dirs[i] is not None:
                raise GraphError(f"edge {key} oriented twice")
            dirs[i] = x < y
        if any(d is None for d in dirs):
            missing = [e for e, d in zip(host.edges(), dirs) if d is None]
            raise GraphError(f"unoriented edges: {missing}")
        return cls(host, tuple(dirs))

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) if d else (v, u) for (u, v), d in zip(self.host.edges(), self.dirs)]

    def out_neighbors(self) -> list[set[int]]:
        out = [set() for _ in range(self.host.n)]
        for x, y in self.arcs():
            out[x].add(y)
        return out


def is_one_perfect(d: Orientation) -> bool:
    """True iff every out-neighbourhood is a clique of the host."""
    return all(d.host.is_clique(sorted(nb)) for nb in d.out_neighbors())


def sinks(d: Orientation) -> list[int]:
    return [v for v, nb in enumerate(d.out_neighbors()) if not nb]


def is_in_tree(d: Orientation) -> bool:
    g = d.host
    if not g.is_connected() or g.m != g.n - 1:
        raise GraphError("in-tree test requires a tree host")
    roots = sinks(d)
    if len(roots) != 1:
        return False
    dist = {roots[0]: 0}
    queue = [roots[0]]
    for v in queue:
        for w in g.adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return all(dist[y] < dist[x] for x, y in d.arcs())


# --- exhaustive enumeration --------------------------------------------------

def enumerate_one_perfect(g: Graph, mode: str = "count", forced_sink: Optional[int] = None):
    """Backtrack over edge directions, pruning non-clique out-neighbourhoods.

    ``mode`` is ``"count"`` (int), ``"collect"`` (list of orientations) or
    ``"first"`` (an orientation or ``None``).  Edges are decided in
    ``host.edges()`` order, trying ``low -> high`` first.  With
    ``forced_sink`` only orientations in which that vertex is a sink count.
    """
    if mode not in ("count", "collect", "first"):
        raise ValueError(f"unknown mode {mode!r}")
    if forced_sink is not None and not 0 <= forced_sink < g.n:
        raise GraphError(f"forced sink {forced_sink} not in graph")
    edges = g.edges()
    nb = [g.neighbors(v) for v in range(g.n)]
    out: list[set[int]] = [set() for _ in range(g.n)]
    dirs: list[bool] = []
    found: list[Orientation] = []
    count = 0

    def choices(u, v):
        if forced_sink == v:
            return (True,)
        if forced_sink == u:
            return (False,)
        return (True, False)

    def rec(i):
        nonlocal count
        if i == len(edges):
            count += 1
            if mode != "count":
                found.append(Orientation(g, tuple(dirs)))
            return mode == "first"
        u, v = edges[i]
        for d in choices(u, v):
            x, y = (u, v) if d else (v, u)
            if out[x] <= nb[y]:
                out[x].add(y)
                dirs.append(d)
                stop = rec(i + 1)
                dirs.pop()
                out[x].discard(y)
                if stop:
                    return True
        return False

    rec(0)
    if mode == "count":
        return count
    if mode == "first":
        return found[0] if found else None
    return found


# --- 2-SAT -------------------------------------------------------------------

@dataclass(frozen=True)
class TwoSatInstance:
    """Edge variables (true = low endpoint -> high endpoint) and 2-clauses.

    A literal is ``2 * var`` for the variable and ``2 * var + 1`` for its
    negation.  A unit clause is stored as ``(lit, lit)``.
    """

    edges: tuple[tuple[int, int], ...]
    clauses: tuple[tuple[int, int], ...]

    @property
    def num_vars(self) -> int:
        return len(self.edges)


def _arc_literal(index, x, y):
    """Literal meaning "the edge {x, y} is oriented x -> y"."""
    var = index[(min(x, y), max(x, y))]
    return 2 * var if x < y else 2 * var + 1


def two_sat_instance(g: Graph, forced_sink: Optional[int] = None) -> TwoSatInstance:
    edges = tuple(g.edges())
    index = {e: i for i, e in enumerate(edges)}
    clauses = []
    for v in range(g.n):
        nbrs = g.adj[v]
        for i, a in enumerate(nbrs):
            for b in nbrs[i + 1:]:
                if not g.has_edge(a, b):
                    clauses.append((_arc_literal(index, v, a) ^ 1, _arc_literal(index, v, b) ^ 1))
    if forced_sink is not None:
        if not 0 <= forced_sink < g.n:
            raise GraphError(f"forced sink {forced_sink} not in graph")
        for u in g.adj[forced_sink]:
            lit = _arc_literal(index, u, forced_sink)
            clauses.append((lit, lit))
    return TwoSatInstance(edges, tuple(clauses))


def solve_two_sat(num_vars: int, clauses: Iterable[tuple[int, int]]) -> Optional[list[bool]]:
    """Implication-graph SCC solver (iterative Tarjan).

    Returns a satisfying assignment or ``None``.  Tarjan numbers components
    in reverse topological order, so a variable is set true when its
    positive literal's component is numbered lower than its negation's.
    """
    nlit = 2 * num_vars
    succ: list[list[int]] = [[] for _ in range(nlit)]
    for a, b in clauses:
        succ[a ^ 1].append(b)
        if a != b:
            succ[b ^ 1].append(a)

    index = [-1] * nlit
    low = [0] * nlit
    comp = [-1] * nlit
    on_stack = [False] * nlit
    stack: list[int] = []
    counter = 0
    ncomp = 0
    for root in range(nlit):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            if i < len(succ[v]):
                work[-1] = (v, i + 1)
                w = succ[v][i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
    values = []
    for var in range(num_vars):
        pos, neg = comp[2 * var], comp[2 * var + 1]
        if pos == neg:
            return None
        values.append(pos < neg)
    return values


@dataclass(frozen=True)
class TwoSatResult:
    accepted: bool
    orientation: Optional[Orientation] = None

    def __bool__(self):
        return self.accepted


def is_1po_2sat(g: Graph, forced_sink: Optional[int] = None) -> TwoSatResult:
    """Decide 1-perfect orientability (optionally with a prescribed sink).

    On acceptance the decoded orientation is re-verified before returning.
    """
    inst = two_sat_instance(g, forced_sink)
    values = solve_two_sat(inst.num_vars, inst.clauses)
    if values is None:
        return TwoSatResult(False)
    d = Orientation(g, tuple(values))
    if not is_one_perfect(d):
        raise AssertionError("2-SAT produced an orientation that is not 1-perfect")
    return TwoSatResult(True, d)


# --- cyclic orientations -----------------------------------------------------

def cyclic_orientation_exists(g: Graph) -> bool:
    """Whether some orientation makes every chordless cycle a directed cycle.

    Triangles count as chordless cycles.  Plain backtracking; a cycle is
    checked as soon as its last edge receives a direction.
    """
    edges = g.edges()
    index = {e: i for i, e in enumerate(edges)}
    cycles = []
    for cyc in chordless_cycles(g):
        k = len(cyc)
        cycles.append([(index[(min(cyc[i], cyc[(i + 1) % k]), max(cyc[i], cyc[(i + 1) % k]))], cyc[i])
                       for i in range(k)])
    # a cycle is finished once its highest-indexed edge is decided
    finishing: list[list[int]] = [[] for _ in edges]
    for ci, cyc in enumerate(cycles):
        finishing[max(e for e, _ in cyc)].append(ci)

    dirs: list[bool] = []

    def cyclic(ci):
        # arc from cyc[i] to cyc[i+1]: forward iff start vertex is the low endpoint
        forward = [dirs[e] == (start == edges[e][0]) for e, start in cycles[ci]]
        return all(forward) or not any(forward)

    def rec(i):
        if i == len(edges):
            return True
        for d in (True, False):
            dirs.append(d)
            if all(cyclic(ci) for ci in finishing[i]) and rec(i + 1):
                return True
            dirs.pop()
        return False

    return rec(0)
