"""Acceptance gate: one pass/fail line per criterion.

Run ``pytest tests/test_acceptance.py -s`` to see the report lines, or
``python3 tests/test_acceptance.py`` to run the gate without pytest.
"""

from __future__ import annotations

import sys
import time

import pytest

from onepo.classes import is_block_cactus, is_k4_minor_free
from onepo.graph import paste
from onepo.oracles import is_1po_2sat, is_one_perfect, sinks
from onepo.patterns import catalog, f1, f1_grid_model, pattern, verify_model
from onepo.structural import (
    orient_chordal_with_sink,
    orient_sink_free,
    recognize,
    recognize_block_cactus,
)
from onepo.workbench.crosscheck import crosscheck
from onepo.workbench.enumeration import enumerate_connected
from onepo.oracles import enumerate_one_perfect, is_in_tree
from onepo.workbench.generators import GeneratorSpec, SplitMix64, generate, grid

# pinned budgets (seconds) and sample sizes
ORACLE_BUDGET = 60.0
THM51_BUDGET = 600.0
N_HOLLOWED = N_TWO_TREES = 200
N_CACTUS = 500
N_CERTIFICATES = 1000
SEED = 20240601


def report(number, ok, detail):
    line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    print(line, flush=True)
    return ok


def _sweep(n, suites):
    t = time.perf_counter()
    rep = crosscheck(n, suites)
    return rep, time.perf_counter() - t


def criterion_1():
    rep, dt = _sweep(6, ["oracle"])
    ok = rep.ok and rep.graphs_checked == 143 and dt < ORACLE_BUDGET
    return report(1, ok, f"oracle agreement n<=6 incl. forced sinks: {rep.graphs_checked} graphs, "
                         f"{len(rep.disagreements)} disagreements, {dt:.1f}s (budget {ORACLE_BUDGET:.0f}s)")


def criterion_2():
    rep, dt = _sweep(8, ["thm51"])
    ok = rep.ok and dt < THM51_BUDGET
    return report(2, ok, f"four-way equivalence on K4-minor-free n<=8: {rep.graphs_checked} graphs, "
                         f"{len(rep.disagreements)} disagreements, {dt:.1f}s (budget {THM51_BUDGET:.0f}s)")


def criterion_3():
    rep, dt = _sweep(8, ["thm61"])
    return report(3, rep.ok, f"four-way equivalence on outerplanar n<=8 (A2' enforced): {rep.graphs_checked} graphs, "
                             f"{len(rep.disagreements)} disagreements, {dt:.1f}s")


def criterion_4():
    a, _ = _sweep(7, ["thm28"])
    b, _ = _sweep(6, ["co_def"])
    ok = a.ok and b.ok
    return report(4, ok, f"CO <=> {{K4,K2_3}}-free n<=7: {len(a.disagreements)} disagreements over {a.graphs_checked}; "
                         f"CO <=> cyclic orientation n<=6: {len(b.disagreements)} over {b.graphs_checked}")


def criterion_5():
    wanted = ["K2_3", "F1", "F2", "F3_3", "F3_4", "F4_1", "F4_2"] + [f"F{i}" for i in range(5, 13)]
    names = {p.name for p in catalog()}
    missing = [w for w in wanted if w not in names]
    accepted = [w for w in wanted if w in names and is_1po_2sat(pattern(w))]
    ok = not missing and not accepted
    return report(5, ok, f"catalog rejected by 2-SAT: {len(wanted) - len(missing) - len(accepted)}/{len(wanted)}"
                         f"{'; missing ' + ','.join(missing) if missing else ''}"
                         f"{'; ACCEPTED ' + ','.join(accepted) if accepted else ''}"
                         "; F5-F10 are reconstructions, not transcriptions (see README)")


def criterion_6():
    rep, _ = _sweep(6, ["lemma29"])
    return report(6, rep.ok, f"single sink + cyclic holes over all 1-perfect orientations, n<=6: "
                             f"{rep.graphs_checked} graphs, {len(rep.disagreements)} violations")


def criterion_7():
    bad = checked = 0
    for n in range(1, 8):
        for t in enumerate_connected(n, lambda g: g.m == g.n - 1):
            found = enumerate_one_perfect(t, "collect")
            checked += 1
            if len(found) != n or not all(is_in_tree(d) for d in found):
                bad += 1
    return report(7, bad == 0, f"trees n<=7: {checked} trees, {bad} with count != n or a non-in-tree")


def criterion_8():
    rng = SplitMix64(SEED)
    failures = []
    for i in range(N_HOLLOWED):
        hole = 4 + rng.below(9)             # 4..12
        n = hole + rng.below(13 - hole)     # hole..12
        g = generate(GeneratorSpec("hollowed_two_tree", {"n": n, "hole": hole}, rng.next_u64()))
        cert = recognize(g)
        d = orient_sink_free(g)
        if not (cert.accepted and cert.check(g) and is_one_perfect(d) and not sinks(d)
                and not any(is_1po_2sat(g, v) for v in range(g.n))):
            failures.append(("hollowed", i))
    for i in range(N_TWO_TREES):
        n = 2 + rng.below(11)               # 2..12
        g = generate(GeneratorSpec("two_tree", {"n": n}, rng.next_u64()))
        for v in range(g.n):
            d = orient_chordal_with_sink(g, v)
            if not (is_one_perfect(d) and sinks(d) == [v]):
                failures.append(("two_tree", i, v))
    return report(8, not failures, f"{N_HOLLOWED} hollowed 2-trees and {N_TWO_TREES} 2-trees (every root), n<=12: "
                                   f"{len(failures)} failures")


def criterion_9():
    rng = SplitMix64(SEED + 9)
    bad = accepted = 0
    for _ in range(N_CACTUS):
        n = 1 + rng.below(10)
        g = generate(GeneratorSpec("block_cactus", {"n": n}, rng.next_u64()))
        cert = recognize_block_cactus(g)
        accepted += cert.accepted
        if cert.accepted != bool(is_1po_2sat(g)) or not cert.check(g):
            bad += 1
    return report(9, bad == 0, f"{N_CACTUS} block-cactus graphs n<=10 ({accepted} accepted): {bad} disagreements")


def criterion_10():
    ok = verify_model(grid(6), f1(), f1_grid_model(), "induced")
    return report(10, ok, "F1 induced-minor model in the 6x6 grid verifies")


def _mixed_inputs(rng):
    kinds = [
        ("a1a2", lambda: {"n": 1 + rng.below(15), "hole": rng.choice([0, 0, 4, 5, 6])}),
        ("two_tree", lambda: {"n": 2 + rng.below(12)}),
        ("hollowed_two_tree", lambda: {"n": 8 + rng.below(5), "hole": 4 + rng.below(5)}),
        ("block_cactus", lambda: {"n": 1 + rng.below(12)}),
        ("paste_sep2", lambda: {"pieces": 1 + rng.below(4)}),
        ("grid", lambda: {"k": 1 + rng.below(3)}),
        ("cycle", lambda: {"n": 3 + rng.below(10)}),
    ]
    def holey():
        return generate(GeneratorSpec("hollowed_two_tree", {"n": 6 + rng.below(3), "hole": 4 + rng.below(3)},
                                      rng.next_u64()))

    while True:
        pick = rng.below(len(kinds) + 2)
        if pick < len(kinds):
            kind, params = kinds[pick]
            yield generate(GeneratorSpec(kind, params(), rng.next_u64()))
        elif pick == len(kinds):
            # two hollowed blocks sharing a cut vertex: rejected
            a, b = holey(), holey()
            yield paste(a, [rng.below(a.n)], b, [rng.below(b.n)])
        else:
            # two hollowed 2-trees glued along an edge: one block that is neither kind
            a, b = holey(), holey()
            yield paste(a, list(rng.choice(a.edges())), b, list(rng.choice(b.edges())))


def criterion_11():
    rng = SplitMix64(SEED + 11)
    counts = {"accept": 0, "reject": 0}
    failures = skipped = 0
    inputs = _mixed_inputs(rng)
    while sum(counts.values()) < N_CERTIFICATES:
        g = next(inputs)
        if is_k4_minor_free(g):
            cert = recognize(g)
        elif is_block_cactus(g):
            cert = recognize_block_cactus(g)
        else:
            skipped += 1
            continue
        counts[cert.verdict] += 1
        if cert.accepted:
            good = is_one_perfect(cert.orientation) and cert.orientation.host == g
        else:
            good = verify_model(g, pattern(cert.witness.pattern), cert.witness.model, "induced")
        failures += not good
    return report(11, failures == 0, f"{N_CERTIFICATES} certificates ({counts['accept']} accept, "
                                     f"{counts['reject']} reject, {skipped} out-of-class inputs skipped): "
                                     f"{failures} failures")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11]


# F11 and F12 exist only as drawings we do not have; the catalog cannot be
# completed, so this criterion is expected to report FAIL.
KNOWN_RED = {criterion_5: "F11, F12 not reconstructible without the figure"}


@pytest.mark.acceptance
@pytest.mark.parametrize("criterion", [
    pytest.param(c, marks=pytest.mark.xfail(reason=KNOWN_RED[c], strict=True)) if c in KNOWN_RED else c
    for c in CRITERIA], ids=lambda f: f.__name__)
def test_acceptance(criterion, capsys):
    with capsys.disabled():
        assert criterion()


if __name__ == "__main__":
    results = [c() for c in CRITERIA]
    print(f"{sum(results)}/{len(results)} criteria pass")
    sys.exit(0 if all(results) else 1)
