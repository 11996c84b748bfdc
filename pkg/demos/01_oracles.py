"""Deciding 1-perfect orientability from the definition.

A 1-perfect orientation points every vertex at a clique.  Small graphs can
be settled by brute force; the 2-SAT reduction decides any graph quickly
and hands back an orientation we can check.
"""

from onepo import build_graph, enumerate_one_perfect, is_1po_2sat, is_one_perfect, sinks
from onepo.patterns import cycle, f2, k23, path

# A path has one 1-perfect orientation per choice of root: the in-trees.
p = path(4)
print("P4 orientations:", enumerate_one_perfect(p))
for d in enumerate_one_perfect(p, "collect"):
    print("   arcs", d.arcs(), "sink", sinks(d))

# Cycles are fine as long as they are oriented around.
res = is_1po_2sat(cycle(6))
print("C6 accepted:", res.accepted, "arcs", res.orientation.arcs())
print("C6 with vertex 0 as a sink:", is_1po_2sat(cycle(6), forced_sink=0).accepted)

# K2,3 and two 4-cycles through one vertex have too many edges for the
# out-degree budget (every neighbourhood is independent there).
for name, g in [("K2,3", k23()), ("F2", f2())]:
    print(name, "2-SAT:", is_1po_2sat(g).accepted, " brute force count:", enumerate_one_perfect(g))

# The 2-SAT witness is always re-verified.
g = build_graph(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)])
d = is_1po_2sat(g).orientation
print("two triangles on a path:", d.arcs(), "verified:", is_one_perfect(d))
