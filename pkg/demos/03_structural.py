"""The block-tree characterisation for K4-minor-free graphs.

A connected K4-minor-free graph is 1-p.o. exactly when all of its blocks
are 2-trees except at most one hollowed 2-tree.  recognize() returns an
orientation or a witness, and either can be checked independently.
"""

from onepo import build_graph, build_sequence, paste, recognize
from onepo.patterns import complete, cycle
from onepo.workbench.formats import certificate_to_json

# A 5-cycle with a triangle hanging off vertex 0: one hole, accepted.
g = paste(cycle(5), [0], complete(3), [0])
cert = recognize(g)
print("triangle + C5:", cert.verdict, "|", cert.reason)
print("   arcs", cert.orientation.arcs(), "check:", cert.check(g))
print("   build sequence:", build_sequence(g))

# Two holes in different blocks: rejected with an F2 model.
g = paste(cycle(5), [0], cycle(5), [0])
cert = recognize(g)
print("\ntwo C5 at a cut vertex:", cert.verdict, "|", cert.reason)
print("  ", certificate_to_json(cert))

# Two 4-cycles sharing an edge form one block that is not a (hollowed) 2-tree.
g = build_graph(6, [(0, 1), (0, 2), (2, 3), (3, 1), (0, 4), (4, 5), (5, 1)])
cert = recognize(g, "outerplanar")
print("\nF1 itself:", cert.verdict, cert.witness.pattern, "check:", cert.check(g))

# Outside the class the recogniser refuses instead of guessing.
try:
    recognize(complete(4))
except ValueError as exc:
    print("\nK4:", exc)
