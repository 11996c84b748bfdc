"""Reproducible random instances and the text formats they travel in."""

from onepo import is_1po_2sat, recognize
from onepo.workbench import GeneratorSpec, generate, parse, serialize

specs = [
    GeneratorSpec("two_tree", {"n": 8}, seed=1),
    GeneratorSpec("hollowed_two_tree", {"n": 9, "hole": 5}, seed=2),
    GeneratorSpec("block_cactus", {"n": 10}, seed=3),
    GeneratorSpec("paste_sep2", {"pieces": 4}, seed=4),
    GeneratorSpec("a1a2", {"n": 12, "hole": 4}, seed=5),
]
for spec in specs:
    g = generate(spec)
    g6 = serialize(g, "graph6").strip()
    assert parse(g6, "graph6") == g == generate(spec)
    print(f"{spec.kind:<18} n={g.n:>2} m={g.m:>2} graph6={g6:<12} 1-p.o.={is_1po_2sat(g).accepted}")

g = generate(specs[1])
print("\nedge list:\n" + serialize(g, "edgelist"))
print("DOT of the certified orientation:\n" + serialize(recognize(g).orientation, "dot"))
