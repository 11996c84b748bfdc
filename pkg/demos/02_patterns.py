"""Forbidden induced minors and how to find them.

Every non-1-p.o. graph contains one of a handful of patterns as an
induced minor.  The containment engine returns branch sets, which anyone
can re-check with verify_model.
"""

from onepo import catalog, find_containment, is_1po_2sat, verify_model
from onepo.patterns import f1, f1_grid_model, pattern
from onepo.workbench.generators import grid

print(f"{'pattern':<10} {'n':>3} {'m':>3}  1-p.o.")
for p in catalog():
    print(f"{p.name:<10} {p.graph.n:>3} {p.graph.m:>3}  {is_1po_2sat(p.graph).accepted}")

# Planar graphs with a big grid minor contain F1, so they are never 1-p.o.
g6 = grid(6)
model = f1_grid_model()
print("\nF1 in the 6x6 grid, branch sets:")
for v, s in model.branch_sets.items():
    print(f"   {v}: {s}")
print("verified:", verify_model(g6, f1(), model, "induced"))

# The search finds a model on its own in a smaller grid.
m = find_containment(grid(4), pattern("F1"), "induced")
print("\nF1 in the 4x4 grid found by search:", dict(m.branch_sets))
