"""Seeded generators for the graph families the theorems talk about."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..graph import Graph, GraphError, build_graph, paste
from ..patterns import complete, cycle, path

MASK64 = (1 << 64) - 1

KINDS = ("cycle", "complete", "path", "star", "grid", "two_tree", "hollowed_two_tree",
         "block_cactus", "paste_sep2", "a1a2")


class SplitMix64:
    """SplitMix64 (Steele, Lea, Flood); pinned so corpora are reproducible anywhere."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection sampling."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - (1 << 64) % bound
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound

    def choice(self, seq):
        return seq[self.below(len(seq))]

    def chance(self, num: int, den: int) -> bool:
        return self.below(den) < num


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    params: dict = field(default_factory=dict)
    seed: int = 0

    def __hash__(self):
        return hash((self.kind, tuple(sorted(self.params.items())), self.seed))


def grid(k: int) -> Graph:
    idx = lambda r, c: r * k + c
    edges = [(idx(r, c), idx(r, c + 1)) for r in range(k) for c in range(k - 1)]
    edges += [(idx(r, c), idx(r + 1, c)) for r in range(k - 1) for c in range(k)]
    return build_graph(k * k, edges)


def star(n: int) -> Graph:
    """K_{1,n-1} with centre 0."""
    return build_graph(n, ((0, i) for i in range(1, n)))


def _grow_simplicial(edges, n_start, n, rng):
    """Attach simplicial degree-2 vertices to uniformly chosen existing edges."""
    edges = list(edges)
    for v in range(n_start, n):
        a, b = rng.choice(edges)
        edges += [(a, v), (b, v)]
    return edges


def two_tree(n: int, rng: SplitMix64) -> Graph:
    if n < 2:
        raise GraphError("2-trees have at least 2 vertices")
    return build_graph(n, _grow_simplicial([(0, 1)], 2, n, rng))


def hollowed_two_tree(n: int, hole: int, rng: SplitMix64) -> Graph:
    if hole < 4 or n < hole:
        raise GraphError("hollowed 2-trees need hole >= 4 and n >= hole")
    return build_graph(n, _grow_simplicial(cycle(hole).edges(), hole, n, rng))


def block_cactus(n: int, rng: SplitMix64, max_block: int = 6) -> Graph:
    """Random connected block-cactus graph: blocks are complete graphs or cycles glued at cut vertices."""
    if n < 1:
        raise GraphError("n must be positive")
    g = build_graph(1)
    while g.n < n:
        size = 2 + rng.below(min(max_block, n - g.n + 1) - 1)
        if size >= 4 and rng.chance(1, 2):
            block = cycle(size)
        else:
            block = complete(size)
        g = paste(g, [rng.below(g.n)], block, [0])
    return g


def paste_sep2(pieces: int, rng: SplitMix64, max_clique: int = 3, max_cycle: int = 6) -> Graph:
    """Iterated pasting along cliques of size 1 or 2 over complete graphs and cycles.

    With ``max_clique <= 3`` the result is K4-free, hence cyclically orientable.
    """
    def piece():
        if rng.chance(1, 2):
            return complete(2 + rng.below(max_clique - 1))
        return cycle(3 + rng.below(max_cycle - 2))

    g = piece()
    for _ in range(pieces - 1):
        h = piece()
        r = 1 + rng.below(2)
        if r == 2 and g.m:
            u, v = rng.choice(g.edges())
            a, b = rng.choice(h.edges())
            g = paste(g, [u, v], h, [a, b])
        else:
            g = paste(g, [rng.below(g.n)], h, [rng.below(h.n)])
    return g


def a1a2(n: int, rng: SplitMix64, hole: int = 0) -> Graph:
    """Random (A1)/(A2) construction from K1 (``hole == 0``) or a cycle of length ``hole``."""
    if hole:
        edges, start = cycle(hole).edges(), hole
    else:
        edges, start = [], 1
    for v in range(start, n):
        if not edges or rng.chance(1, 3):
            edges.append((rng.below(v), v))
        else:
            a, b = rng.choice(edges)
            edges += [(a, v), (b, v)]
    return build_graph(max(n, start), edges)


def generate(spec: GeneratorSpec) -> Graph:
    """Build the graph described by ``spec``; equal specs give identical labelled graphs."""
    p = dict(spec.params)
    rng = SplitMix64(spec.seed)
    kind = spec.kind
    try:
        if kind == "cycle":
            return cycle(p["n"])
        if kind == "complete":
            return complete(p["n"])
        if kind == "path":
            return path(p["n"])
        if kind == "star":
            return star(p["n"])
        if kind == "grid":
            return grid(p["k"])
        if kind == "two_tree":
            return two_tree(p["n"], rng)
        if kind == "hollowed_two_tree":
            return hollowed_two_tree(p["n"], p.get("hole", 4), rng)
        if kind == "block_cactus":
            return block_cactus(p["n"], rng, p.get("max_block", 6))
        if kind == "paste_sep2":
            return paste_sep2(p.get("pieces", 3), rng, p.get("max_clique", 3), p.get("max_cycle", 6))
        if kind == "a1a2":
            return a1a2(p["n"], rng, p.get("hole", 0))
    except KeyError as exc:
        raise GraphError(f"generator {kind!r} is missing parameter {exc}") from None
    raise GraphError(f"unknown generator kind {kind!r}")
