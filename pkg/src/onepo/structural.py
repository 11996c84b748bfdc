"""Structural recognition of 1-perfectly orientable K4-minor-free and outerplanar graphs.

A connected K4-minor-free graph is 1-perfectly orientable exactly when all
of its blocks are 2-trees except possibly one hollowed 2-tree.  This module
turns that statement into certificates: an explicit orientation assembled
block by block along the block tree, or an induced-minor model of K2,3, F1
or F2.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Optional

from .classes import (
    is_2tree,
    is_block_cactus,
    is_hollowed_2tree,
    is_k4_minor_free,
    is_outerplanar,
    peo_starting_at,
)
from .graph import (
    Graph,
    GraphError,
    PreconditionError,
    blocks_and_cut_vertices,
    build_graph,
    chordless_cycles,
    contract,
    delete_vertex,
    induce,
    rooted_tree_orientation,
)
from .oracles import Orientation, is_one_perfect
from .patterns import MinorModel, find_containment, pattern, verify_model

MODES = ("k4mf", "outerplanar")


class BlockLabel(enum.Enum):
    TWO_TREE_LIKE = "2tree"
    HOLLOWED = "hollowed"
    OTHER = "other"


@dataclass(frozen=True)
class Witness:
    pattern: str
    model: MinorModel


@dataclass(frozen=True)
class Certificate:
    """Accept with an orientation, or reject with a named induced-minor model."""

    verdict: str
    orientation: Optional[Orientation] = None
    witness: Optional[Witness] = None
    reason: str = ""

    @property
    def accepted(self) -> bool:
        return self.verdict == "accept"

    def check(self, g: Graph) -> bool:
        """Re-verify the certificate against ``g`` from scratch."""
        if self.accepted:
            return (self.orientation is not None and self.orientation.host == g
                    and is_one_perfect(self.orientation))
        if self.witness is None:
            return False
        return verify_model(g, pattern(self.witness.pattern), self.witness.model, "induced")


def _accept(d: Orientation, reason: str) -> Certificate:
    return Certificate("accept", orientation=d, reason=reason)


def _reject(name: str, model: MinorModel, reason: str) -> Certificate:
    return Certificate("reject", witness=Witness(name, model), reason=reason)


def _is_biconnected(g: Graph) -> bool:
    return g.is_connected() and len(blocks_and_cut_vertices(g).blocks) <= 1


def _require(cond: bool, msg: str):
    if not cond:
        raise PreconditionError(msg)


# --- block orientations ------------------------------------------------------

def orient_chordal_with_sink(g: Graph, v: int) -> Orientation:
    """1-perfect orientation of a connected chordal graph whose only sink is ``v``.

    Each vertex points to its neighbours that come earlier in a construction
    order starting at ``v``.
    """
    _require(g.is_connected(), "orient_chordal_with_sink needs a connected graph")
    try:
        sigma = peo_starting_at(g, v).construction_order
    except GraphError as exc:
        raise PreconditionError(str(exc)) from None
    pos = {x: i for i, x in enumerate(sigma)}
    return Orientation.from_arcs(g, ((a, b) if pos[a] > pos[b] else (b, a) for a, b in g.edges()))


def _cycle_order(c: Graph) -> list[int]:
    order, prev, cur = [0], None, 0
    while len(order) < c.n:
        nxt = min(c.adj[cur]) if prev is None else next(w for w in c.adj[cur] if w != prev)
        prev, cur = cur, nxt
        order.append(nxt)
    return order


def cyclic_arcs(cyc: list[int]) -> list[tuple[int, int]]:
    return [(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))]


def orient_sink_free(g: Graph) -> Orientation:
    """Sink-free 1-perfect orientation of a 2-connected 2-tree or hollowed 2-tree.

    The base cycle (the hole, or the first triangle of a 2-tree) is oriented
    cyclically and every re-attached vertex points at its two neighbours.
    """
    trace = is_hollowed_2tree(g)
    if trace is not None:
        rv = trace.residue_vertices
        arcs = cyclic_arcs([rv[i] for i in _cycle_order(trace.residue)])
        removed = trace.removed
    else:
        trace = is_2tree(g)
        _require(trace is not None and g.n >= 3, "orient_sink_free needs a 2-connected (hollowed) 2-tree")
        a, b = trace.residue_vertices
        v, _ = trace.removed[-1]
        arcs = cyclic_arcs([a, b, v])
        removed = trace.removed[:-1]
    for v, (a, b) in reversed(removed):
        arcs += [(v, a), (v, b)]
    return Orientation.from_arcs(g, arcs)


def classify_block(b: Graph) -> BlockLabel:
    _require(b.n >= 2 and _is_biconnected(b), "classify_block needs a biconnected graph on >= 2 vertices")
    if is_2tree(b) is not None:
        return BlockLabel.TWO_TREE_LIKE
    if is_hollowed_2tree(b) is not None:
        return BlockLabel.HOLLOWED
    return BlockLabel.OTHER


# --- witnesses ---------------------------------------------------------------

def _lift(model: MinorModel, labels) -> MinorModel:
    return MinorModel.of({a: [labels[x] for x in s] for a, s in model.branch_sets.items()})


def _search_witness(g: Graph, names) -> Optional[Witness]:
    for name in names:
        model = find_containment(g, pattern(name), "induced")
        if model is not None:
            return Witness(name, model)
    return None


def _is_other_block(b: Graph) -> bool:
    return b.n >= 2 and _is_biconnected(b) and classify_block(b) is BlockLabel.OTHER


def _other_block_witness(b: Graph) -> Witness:
    """K2,3 or F1 model in a biconnected K4-minor-free block that is neither kind of 2-tree.

    Deletes vertices and contracts edges while the block stays biconnected
    and of the same kind, then searches the small remainder; the branch sets
    found there are expanded back through the contractions.
    """
    cur = b
    sets = [[x] for x in range(b.n)]
    shrunk = True
    while shrunk:
        shrunk = False
        for v in range(cur.n):
            h = delete_vertex(cur, v)
            if _is_other_block(h):
                cur, shrunk = h, True
                del sets[v]
                break
        if shrunk:
            continue
        for u, v in cur.edges():
            h = contract(cur, u, v)
            if _is_other_block(h):
                cur, shrunk = h, True
                sets[u] = sets[u] + sets[v]
                del sets[v]
                break
    w = _search_witness(cur, ("K2_3", "F1"))
    if w is None:
        raise AssertionError("no K2,3/F1 witness in a non-(hollowed-)2-tree block")
    model = MinorModel.of({a: [x for y in s for x in sets[y]] for a, s in w.model.branch_sets.items()})
    if not verify_model(b, pattern(w.pattern), model, "induced"):
        raise AssertionError("lifted witness does not verify")
    return Witness(w.pattern, model)


def _hole(g: Graph, block) -> list[int]:
    """The unique hole of a hollowed-2-tree or long-cycle block, in cyclic order."""
    b = induce(g, block)
    trace = is_hollowed_2tree(b)
    if trace is None:
        raise GraphError("block has no unique hole")
    return [block[trace.residue_vertices[i]] for i in _cycle_order(trace.residue)]


def _shortest_path(g: Graph, sources, targets, allowed=None) -> list[int]:
    targets = set(targets)
    prev = {s: None for s in sources}
    queue = list(sources)
    for v in queue:
        if v in targets:
            out = [v]
            while prev[out[-1]] is not None:
                out.append(prev[out[-1]])
            return out[::-1]
        for w in g.adj[v]:
            if w not in prev and (allowed is None or w in allowed):
                prev[w] = v
                queue.append(w)
    raise GraphError("no path")


def _two_holes_f2(g: Graph, block_a, block_b) -> MinorModel:
    """F2 model from the holes of two different blocks.

    The hub branch set is a shortest path between the two holes; each hole
    contributes the two neighbours of its attachment vertex and the rest of
    the hole.
    """
    hole_a, hole_b = _hole(g, block_a), _hole(g, block_b)
    link = _shortest_path(g, hole_a, hole_b)
    sets = {}
    # F2: 4-cycles 0-1-2-3 and 3-4-5-6, hub 3
    for hole, (left, far, right) in ((hole_a, (0, 1, 2)), (hole_b, (4, 5, 6))):
        end = link[0] if link[0] in hole else link[-1]
        i = hole.index(end)
        rot = hole[i:] + hole[:i]
        sets[left], sets[far], sets[right] = [rot[1]], rot[2:-1], [rot[-1]]
    sets[3] = link
    return MinorModel.of(sets)


# --- recognition -------------------------------------------------------------

def recognize_biconnected(g: Graph) -> Certificate:
    """Biconnected K4-minor-free graphs: accept K1, 2-trees and hollowed 2-trees."""
    _require(_is_biconnected(g), "recognize_biconnected needs a biconnected graph")
    _require(is_k4_minor_free(g), "recognize_biconnected needs a K4-minor-free graph")
    if g.n == 1:
        return _accept(Orientation(g, ()), "K1")
    if g.n == 2:
        return _accept(orient_chordal_with_sink(g, 1), "K2")
    label = classify_block(g)
    if label is not BlockLabel.OTHER:
        return _accept(orient_sink_free(g), f"{label.value} block")
    w = _other_block_witness(g)
    return _reject(w.pattern, w.model, "neither a 2-tree nor a hollowed 2-tree")


def recognize_biconnected_rooted(g: Graph, v: int) -> Certificate:
    """Accept iff ``g`` has a 1-perfect orientation with sink ``v`` (K1 or 2-tree).

    A rejected hollowed 2-tree is certified by its hole (a ``C4`` induced
    minor); other rejections by a K2,3 or F1 model.
    """
    _require(_is_biconnected(g), "recognize_biconnected_rooted needs a biconnected graph")
    _require(is_k4_minor_free(g), "recognize_biconnected_rooted needs a K4-minor-free graph")
    _require(0 <= v < g.n, f"vertex {v} not in graph")
    if g.n == 1 or is_2tree(g) is not None:
        return _accept(orient_chordal_with_sink(g, v), "K1 or 2-tree")
    if is_hollowed_2tree(g) is not None:
        hole = _hole(g, tuple(range(g.n)))
        model = MinorModel.of({0: [hole[0]], 1: [hole[1]], 2: hole[2:-1], 3: [hole[-1]]})
        return _reject("C4", model, "hollowed 2-tree: every 1-perfect orientation is sink-free")
    w = _other_block_witness(g)
    return _reject(w.pattern, w.model, "neither K1 nor a 2-tree")


def _assemble(g: Graph, root_block: Optional[int], orient_root: Callable, orient_rooted: Callable,
              blocks) -> Orientation:
    """Glue per-block orientations along the block tree rooted at ``root_block``.

    Every non-root block is oriented with its parent cut vertex as sink, so
    each cut vertex keeps only the out-arcs of its parent block.
    """
    dec = blocks_and_cut_vertices(g)
    tree, labels, nb = dec.block_tree()
    rooted = rooted_tree_orientation(tree, root_block)
    arcs = []
    for i, block in enumerate(dec.blocks):
        sub = induce(g, block)
        if i == root_block:
            d = orient_root(sub)
        else:
            cut = labels[rooted.parent[i]][1]
            d = orient_rooted(sub, block.index(cut))
        arcs += [(block[x], block[y]) for x, y in d.arcs()]
    return Orientation.from_arcs(g, arcs)


def _root_2tree(sub: Graph) -> Orientation:
    return orient_chordal_with_sink(sub, 0)


def build_orientation(g: Graph) -> Orientation:
    """Orientation of a connected graph whose blocks are 2-trees except at most one hollowed block."""
    _require(g.is_connected(), "build_orientation needs a connected graph")
    if g.n == 1:
        return Orientation(g, ())
    dec = blocks_and_cut_vertices(g)
    labels = [classify_block(induce(g, b)) for b in dec.blocks]
    if BlockLabel.OTHER in labels or labels.count(BlockLabel.HOLLOWED) > 1:
        raise PreconditionError("build_orientation called on a rejected graph")
    if BlockLabel.HOLLOWED in labels:
        root = labels.index(BlockLabel.HOLLOWED)
        return _assemble(g, root, orient_sink_free, orient_chordal_with_sink, dec.blocks)
    return _assemble(g, 0, _root_2tree, orient_chordal_with_sink, dec.blocks)


def _recognize_connected(g: Graph) -> Certificate:
    if g.n == 1:
        return _accept(Orientation(g, ()), "K1")
    dec = blocks_and_cut_vertices(g)
    subs = [induce(g, b) for b in dec.blocks]
    labels = [classify_block(s) for s in subs]
    for i, lab in enumerate(labels):
        if lab is BlockLabel.OTHER:
            w = _other_block_witness(subs[i])
            model = _lift(w.model, dec.blocks[i])
            return _reject(w.pattern, model, f"block {list(dec.blocks[i])} is neither a 2-tree nor a hollowed 2-tree")
    hollow = [i for i, lab in enumerate(labels) if lab is BlockLabel.HOLLOWED]
    if len(hollow) > 1:
        a, b = hollow[:2]
        model = _two_holes_f2(g, dec.blocks[a], dec.blocks[b])
        return _reject("F2", model, "two blocks are hollowed 2-trees")
    return _accept(build_orientation(g), "all blocks are 2-trees except at most one hollowed 2-tree")


def _per_component(g: Graph, decide: Callable[[Graph], Certificate]) -> Certificate:
    comps = g.components()
    if len(comps) == 1:
        return decide(g)
    arcs = []
    reasons = []
    for comp in comps:
        cert = decide(induce(g, comp))
        if not cert.accepted:
            w = cert.witness
            return _reject(w.pattern, _lift(w.model, comp), f"component {comp}: {cert.reason}")
        arcs += [(comp[x], comp[y]) for x, y in cert.orientation.arcs()]
        reasons.append(cert.reason)
    return _accept(Orientation.from_arcs(g, arcs), "every component accepted")


def recognize(g: Graph, mode: str = "k4mf") -> Certificate:
    """Decide 1-perfect orientability of a K4-minor-free (or outerplanar) graph.

    Inputs outside the mode's class raise :class:`PreconditionError`; use
    :func:`onepo.oracles.is_1po_2sat` for those.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    _require(is_k4_minor_free(g), "input is not K4-minor-free")
    if mode == "outerplanar":
        _require(is_outerplanar(g), "input is not outerplanar")
    return _per_component(g, _recognize_connected)


def block_condition(g: Graph) -> bool:
    """Every block of every component is a 2-tree, except at most one hollowed 2-tree per component."""
    for comp in g.components():
        if len(comp) == 1:
            continue
        sub = induce(g, comp)
        labels = [classify_block(induce(sub, b)) for b in blocks_and_cut_vertices(sub).blocks]
        if BlockLabel.OTHER in labels or labels.count(BlockLabel.HOLLOWED) > 1:
            return False
    return True


# --- block-cactus graphs -----------------------------------------------------

def _is_long_cycle_block(b: Graph) -> bool:
    return b.n >= 4 and b.m == b.n


def recognize_block_cactus(g: Graph) -> Certificate:
    """Connected block-cactus graphs: accept iff at most one block is a cycle of length >= 4."""
    _require(g.is_connected(), "recognize_block_cactus needs a connected graph")
    _require(is_block_cactus(g), "input is not a block-cactus graph")
    if g.n == 1:
        return _accept(Orientation(g, ()), "K1")
    dec = blocks_and_cut_vertices(g)
    long_cycles = [i for i, b in enumerate(dec.blocks) if _is_long_cycle_block(induce(g, b))]
    if len(long_cycles) > 1:
        a, b = long_cycles[:2]
        return _reject("F2", _two_holes_f2(g, dec.blocks[a], dec.blocks[b]), "two blocks are long cycles")
    if long_cycles:
        root = long_cycles[0]

        def orient_root(sub):
            return Orientation.from_arcs(sub, cyclic_arcs(_cycle_order(sub)))
    else:
        root, orient_root = 0, _root_2tree
    d = _assemble(g, root, orient_root, orient_chordal_with_sink, dec.blocks)
    return _accept(d, "at most one block is a long cycle")


# --- build sequences ---------------------------------------------------------

@dataclass(frozen=True)
class BuildSequence:
    """Construction from K1 (``base == 0``) or a cycle of length ``base``.

    Base vertices get labels ``0..k-1`` (the cycle in order); every step adds
    the next label.  Steps are ``("A1", u)`` or ``("A2", a, b)``.
    ``labels[i]`` is the target-graph label of the i-th created vertex.
    """

    base: int
    steps: tuple[tuple, ...]
    labels: tuple[int, ...] = field(default=())


def _count_cycles_through(g: Graph, a: int, b: int) -> int:
    count = 0
    for cyc in chordless_cycles(g):
        k = len(cyc)
        for i in range(k):
            if {cyc[i], cyc[(i + 1) % k]} == {a, b}:
                count += 1
                break
    return count


def apply_steps(seq: BuildSequence, enforce_a2_prime: bool = False) -> Graph:
    """Replay a build sequence; optionally reject A2 steps on edges in two or more induced cycles."""
    if seq.base == 0:
        n, edges = 1, []
    elif seq.base >= 3:
        n, edges = seq.base, [(i, (i + 1) % seq.base) for i in range(seq.base)]
    else:
        raise GraphError(f"invalid base {seq.base}")
    adj = {v: set() for v in range(n)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    for step in seq.steps:
        kind, *args = step
        if any(not 0 <= x < n for x in args):
            raise GraphError(f"step {step} references a missing vertex")
        if kind == "A1" and len(args) == 1:
            targets = args
        elif kind == "A2" and len(args) == 2:
            a, b = args
            if b not in adj[a]:
                raise GraphError(f"step {step} targets a non-edge")
            if enforce_a2_prime:
                cur = build_graph(n, [(x, y) for x in adj for y in adj[x] if x < y])
                if _count_cycles_through(cur, a, b) > 1:
                    raise GraphError(f"step {step}: edge lies in more than one induced cycle")
            targets = args
        else:
            raise GraphError(f"malformed step {step}")
        adj[n] = set()
        for t in targets:
            adj[n].add(t)
            adj[t].add(n)
        n += 1
    labels = seq.labels or tuple(range(n))
    if sorted(labels) != list(range(n)):
        raise GraphError("labels must be a permutation of the created vertices")
    return build_graph(n, [(labels[x], labels[y]) for x in adj for y in adj[x] if x < y])


def build_sequence(g: Graph, mode: str = "k4mf") -> Optional[BuildSequence]:
    """Reverse-engineer an (A1)/(A2) construction of a connected graph, or ``None``.

    Strips the lowest-indexed vertex of degree 1, or of degree 2 with
    adjacent neighbours, until K1 or a chordless cycle remains.  In
    outerplanar mode the result is replayed with the A2' side condition.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    _require(g.n >= 1 and g.is_connected(), "build_sequence needs a connected graph")
    _require(is_k4_minor_free(g), "input is not K4-minor-free")
    if mode == "outerplanar":
        _require(is_outerplanar(g), "input is not outerplanar")
    nbrs = {u: set(g.adj[u]) for u in range(g.n)}

    def removable(u):
        nb = nbrs[u]
        if len(nb) == 1:
            return True
        if len(nb) == 2:
            a, b = nb
            return b in nbrs[a]
        return False

    removed = []
    while len(nbrs) > 1:
        u = next((x for x in sorted(nbrs) if removable(x)), None)
        if u is None:
            break
        removed.append((u, tuple(sorted(nbrs[u]))))
        for w in nbrs.pop(u):
            nbrs[w].discard(u)
    if len(nbrs) == 1:
        base_vertices = list(nbrs)
        base = 0
    else:
        rest = induce(g, sorted(nbrs))
        if not (rest.m == rest.n and all(rest.degree(x) == 2 for x in rest.vertices()) and rest.is_connected()):
            return None
        order = sorted(nbrs)
        base_vertices = [order[i] for i in _cycle_order(rest)]
        base = len(base_vertices)
    created = {v: i for i, v in enumerate(base_vertices)}
    labels = list(base_vertices)
    steps = []
    for u, targets in reversed(removed):
        steps.append(("A1" if len(targets) == 1 else "A2",) + tuple(created[t] for t in targets))
        created[u] = len(labels)
        labels.append(u)
    seq = BuildSequence(base, tuple(steps), tuple(labels))
    if apply_steps(seq) != g:
        raise AssertionError("build sequence does not replay to the input graph")
    if mode == "outerplanar":
        try:
            apply_steps(seq, enforce_a2_prime=True)
        except GraphError:
            return None
    return seq
