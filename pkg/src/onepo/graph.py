"""Immutable simple graphs and the decomposition primitives built on them."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for malformed graphs or operations applied outside their domain."""


class PreconditionError(GraphError):
    """Input lies outside the class an operation is defined on (not a rejection)."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the sorted tuple of neighbours of ``v``.  Instances are
    immutable and hashable; build them with :func:`build_graph`.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]
    _sets: tuple[frozenset, ...] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        sets = tuple(frozenset(row) for row in self.adj)
        for v, row in enumerate(sets):
            if v in row:
                raise GraphError(f"self-loop at {v}")
            for u in row:
                if not 0 <= u < self.n or v not in sets[u]:
                    raise GraphError(f"asymmetric or out-of-range adjacency {v}-{u}")
        object.__setattr__(self, "_sets", sets)

    def __len__(self):
        return self.n

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset:
        return self._sets[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._sets[u]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @property
    def m(self) -> int:
        return sum(len(row) for row in self.adj) // 2

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(a, b) for a, b in combinations(vs, 2))

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_connected_subset(self, vertices: Iterable[int]) -> bool:
        """Whether ``vertices`` (non-empty) induces a connected subgraph."""
        vs = set(vertices)
        if not vs:
            return False
        start = next(iter(vs))
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in self.adj[v]:
                if w in vs and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(vs)

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def build_graph(n: int, edges: Iterable[Sequence[int]] = ()) -> Graph:
    """Normalise an edge list into a :class:`Graph`.

    Duplicate and reversed edges collapse to one; self-loops and indices
    outside ``0..n-1`` raise :class:`GraphError`.
    """
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


# --- transformations ---------------------------------------------------------

def complement(g: Graph) -> Graph:
    return build_graph(g.n, ((u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v)))


def induce(g: Graph, subset: Iterable[int]) -> Graph:
    """Induced subgraph on ``subset``, relabelled ``0..k-1`` in increasing order."""
    keep = sorted(set(subset))
    for v in keep:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} not in graph")
    index = {v: i for i, v in enumerate(keep)}
    return build_graph(len(keep), ((index[u], index[v]) for u, v in g.edges() if u in index and v in index))


def delete_vertex(g: Graph, v: int) -> Graph:
    return induce(g, (u for u in range(g.n) if u != v))


def contract(g: Graph, u: int, v: int) -> Graph:
    """Contract edge ``{u, v}``; the merged vertex keeps the smaller label.

    Labels above the removed vertex shift down by one.
    """
    if not g.has_edge(u, v):
        raise GraphError(f"cannot contract non-edge ({u}, {v})")
    keep, gone = min(u, v), max(u, v)

    def relabel(x):
        x = keep if x == gone else x
        return x - 1 if x > gone else x

    edges = []
    for a, b in g.edges():
        ra, rb = relabel(a), relabel(b)
        if ra != rb:
            edges.append((ra, rb))
    return build_graph(g.n - 1, edges)


def transform(g: Graph, kind: str, *args) -> Graph:
    """Dispatch ``complement``, ``contract(u, v)`` or ``induce(S)`` by name."""
    if kind == "complement":
        return complement(g)
    if kind == "contract":
        return contract(g, *args)
    if kind == "induce":
        return induce(g, *args)
    raise GraphError(f"unknown transform {kind!r}")


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    return paste(g1, [], g2, [])


def paste(g1: Graph, clique1: Sequence[int], g2: Graph, clique2: Sequence[int]) -> Graph:
    """Glue ``g2`` onto ``g1`` by identifying ``clique2[i]`` with ``clique1[i]``.

    Vertices of ``g1`` keep their labels; the remaining vertices of ``g2``
    follow in increasing order.
    """
    if len(clique1) != len(clique2):
        raise GraphError("pasting cliques must have equal size")
    if len(set(clique1)) != len(clique1) or len(set(clique2)) != len(clique2):
        raise GraphError("pasting lists must not repeat vertices")
    if not g1.is_clique(clique1) or not g2.is_clique(clique2):
        raise GraphError("pasting lists must induce cliques")
    mapping = dict(zip(clique2, clique1))
    nxt = g1.n
    for v in range(g2.n):
        if v not in mapping:
            mapping[v] = nxt
            nxt += 1
    edges = list(g1.edges()) + [(mapping[a], mapping[b]) for a, b in g2.edges()]
    return build_graph(nxt, edges)


# --- block decomposition -----------------------------------------------------

@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks, cut vertices and block-tree edges ``(block index, cut vertex)``."""

    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: tuple[int, ...]
    tree_edges: tuple[tuple[int, int], ...]

    def block_tree(self) -> tuple[Graph, list, int]:
        """Block tree as a :class:`Graph`.

        Returns ``(tree, labels, nblocks)``; node ``i < nblocks`` is block
        ``i`` and node ``nblocks + j`` is ``cut_vertices[j]``.  ``labels``
        maps tree nodes to ``("block", i)`` / ``("cut", v)``.
        """
        nb = len(self.blocks)
        cut_index = {c: nb + j for j, c in enumerate(self.cut_vertices)}
        tree = build_graph(nb + len(self.cut_vertices), ((b, cut_index[c]) for b, c in self.tree_edges))
        labels = [("block", i) for i in range(nb)] + [("cut", c) for c in self.cut_vertices]
        return tree, labels, nb


def blocks_and_cut_vertices(g: Graph) -> BlockDecomposition:
    """Hopcroft-Tarjan lowpoint DFS from vertex 0.

    Blocks appear in the order their DFS subtree is closed; each block is a
    sorted vertex tuple.  K1 yields the single block ``(0,)``.
    """
    if g.n == 0:
        return BlockDecomposition((), (), ())
    if not g.is_connected():
        raise GraphError("block decomposition requires a connected graph")
    if g.n == 1:
        return BlockDecomposition(((0,),), (), ())

    disc = [-1] * g.n
    low = [0] * g.n
    blocks: list[tuple[int, ...]] = []
    cuts: set[int] = set()
    edge_stack: list[tuple[int, int]] = []
    counter = 0

    # iterative DFS: frames of (vertex, parent, neighbour iterator)
    disc[0] = low[0] = counter
    counter += 1
    stack = [(0, -1, iter(g.adj[0]))]
    root_children = 0
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                edge_stack.append((v, w))
                disc[w] = low[w] = counter
                counter += 1
                if v == 0:
                    root_children += 1
                stack.append((w, v, iter(g.adj[w])))
                advanced = True
                break
            if w != parent and disc[w] < disc[v]:
                edge_stack.append((v, w))
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent == -1:
            continue
        low[parent] = min(low[parent], low[v])
        if low[v] >= disc[parent]:
            if parent != 0:
                cuts.add(parent)
            comp = set()
            while True:
                a, b = edge_stack.pop()
                comp.update((a, b))
                if (a, b) == (parent, v):
                    break
            blocks.append(tuple(sorted(comp)))
    if root_children > 1:
        cuts.add(0)
    cut_vertices = tuple(sorted(cuts))
    tree_edges = tuple((i, c) for i, b in enumerate(blocks) for c in b if c in cuts)
    return BlockDecomposition(tuple(blocks), cut_vertices, tree_edges)


# --- rooted tree orientation -------------------------------------------------

@dataclass(frozen=True)
class RootedTreeOrientation:
    """Every non-root node points to its parent, one step closer to ``root``."""

    root: int
    parent: dict

    def arcs(self) -> list[tuple[int, int]]:
        return sorted(self.parent.items())


def rooted_tree_orientation(tree: Graph, root: int) -> RootedTreeOrientation:
    if not 0 <= root < tree.n:
        raise GraphError(f"root {root} not in tree")
    if not tree.is_connected() or tree.m != tree.n - 1:
        raise GraphError("rooted orientation requires a tree")
    parent = {}
    seen = {root}
    queue = [root]
    for v in queue:
        for w in tree.adj[v]:
            if w not in seen:
                seen.add(w)
                parent[w] = v
                queue.append(w)
    return RootedTreeOrientation(root, parent)


# --- chordless cycles --------------------------------------------------------

def chordless_cycles(g: Graph) -> list[tuple[int, ...]]:
    """All induced cycles of length at least 3.

    Each cycle is reported once, starting at its smallest vertex and
    continuing toward the smaller of that vertex's two cycle neighbours.
    Exponential in general; meant for graphs with at most a dozen vertices.
    """
    cycles = []
    nb = g._sets
    for s in range(g.n):
        # paths s, a, ..., x with every vertex > s; chordless except possibly closing edge
        for a in g.adj[s]:
            if a < s:
                continue
            _extend_chordless(nb, s, [s, a], {s, a}, cycles)
    return cycles


def _extend_chordless(nb, s, path, on_path, out):
    last = path[-1]
    for w in sorted(nb[last]):
        if w <= s or w in on_path:
            continue
        # w may only touch the path at `last` and, when it closes the cycle, at s
        inner = on_path & nb[w]
        inner.discard(last)
        if len(path) >= 2 and s in inner:
            inner.discard(s)
            if inner:
                continue
            # closing: cycle s, path[1], ..., w; canonical if path[1] < w
            if path[1] < w:
                out.append(tuple(path) + (w,))
            continue
        if inner:
            continue
        path.append(w)
        on_path.add(w)
        _extend_chordless(nb, s, path, on_path, out)
        path.pop()
        on_path.discard(w)
