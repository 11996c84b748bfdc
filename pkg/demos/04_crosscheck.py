"""Exhaustive crosschecks: theory against oracles on every small graph."""

import time

from onepo.workbench import crosscheck

for suite, n in [("oracle", 6), ("thm51", 7), ("thm61", 7), ("thm28", 6), ("lemma29", 5), ("sep2", 6)]:
    t = time.perf_counter()
    rep = crosscheck(n, [suite])
    print(f"{suite:<8} n<={n}: {rep.graphs_checked:>5} graphs, "
          f"{len(rep.disagreements)} disagreements, {time.perf_counter() - t:.1f}s")
