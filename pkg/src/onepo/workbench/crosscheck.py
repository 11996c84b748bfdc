"""Pit the structural recognisers against the oracles on exhaustively enumerated graphs."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from ..classes import is_cyclically_orientable, is_k4_minor_free, is_outerplanar, separability_at_most_2
from ..graph import blocks_and_cut_vertices, chordless_cycles
from ..oracles import cyclic_orientation_exists, enumerate_one_perfect, is_1po_2sat, is_in_tree, sinks
from ..patterns import contains, pattern
from ..structural import block_condition, build_sequence, recognize, recognize_biconnected_rooted
from .enumeration import MAX_BUILTIN_N, enumerate_connected
from .formats import to_graph6


@dataclass
class CrosscheckReport:
    n_max: int
    graphs_checked: int = 0
    disagreements: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements


def _free_of(g, names):
    return not any(contains(g, pattern(name)) for name in names)


def _po(g, sink=None):
    return is_1po_2sat(g, sink).accepted


# Each check returns a list of (predicate pair, verdicts) disagreements for one graph.

def _check_oracle(g):
    out = []
    for sink in [None] + list(range(g.n)):
        a, b = _po(g, sink), enumerate_one_perfect(g, "count", sink) > 0
        if a != b:
            out.append((f"2sat~enum[sink={sink}]", (a, b)))
    return out


def _check_thm51(g, mode="k4mf"):
    verdicts = (
        _po(g),
        _free_of(g, ("K2_3", "F1", "F2")),
        block_condition(g),
        build_sequence(g, mode) is not None,
    )
    cert = recognize(g, mode)
    ok = cert.check(g) and cert.accepted == verdicts[0]
    if len(set(verdicts)) > 1 or not ok:
        return [(f"{mode}:2sat~forbidden~blocks~sequence~certificate", verdicts + (ok,))]
    return []


def _check_thm61(g):
    return _check_thm51(g, "outerplanar")


def _check_thm28(g):
    a = is_cyclically_orientable(g)
    b = _free_of(g, ("K4", "K2_3"))
    return [] if a == b else [("co~{K4,K2_3}-free", (a, b))]


def _check_co_definition(g):
    a, b = is_cyclically_orientable(g), cyclic_orientation_exists(g)
    return [] if a == b else [("co~cyclic_orientation_exists", (a, b))]


def _check_sep2(g):
    a = separability_at_most_2(g)
    b = _free_of(g, ("K2_3", "F13", "F14", "F15"))
    return [] if a == b else [("sep2~{K2_3,F13,F14,F15}-free", (a, b))]


def _check_lemma29(g):
    """Every 1-perfect orientation: at most one sink, every hole directed."""
    holes = [c for c in chordless_cycles(g) if len(c) >= 4]
    out = []
    for d in enumerate_one_perfect(g, "collect"):
        if len(sinks(d)) > 1:
            out.append(("lemma2.9:sinks<=1", tuple(d.arcs())))
        arcs = set(d.arcs())
        for c in holes:
            k = len(c)
            fwd = [(c[i], c[(i + 1) % k]) in arcs for i in range(k)]
            if not (all(fwd) or not any(fwd)):
                out.append(("lemma2.2:hole cyclic", (c, tuple(d.arcs()))))
    return out


def _check_lemma210(g):
    if g.m != g.n - 1:
        return []
    found = enumerate_one_perfect(g, "collect")
    out = []
    if len(found) != g.n:
        out.append(("lemma2.10:count==n", (len(found), g.n)))
    if not all(is_in_tree(d) for d in found):
        out.append(("lemma2.10:in-tree", False))
    return out


def _check_k4mf(g):
    a, b = is_k4_minor_free(g), not contains(g, pattern("K4"), "minor")
    return [] if a == b else [("k4mf~K4-minor-search", (a, b))]


def _check_cor52(g):
    po = _po(g)
    v = (po and is_k4_minor_free(g), po and is_cyclically_orientable(g), _free_of(g, ("K4", "K2_3", "F1", "F2")))
    return [] if len(set(v)) == 1 else [("cor5.2", v)]


def _check_cor62(g):
    po = _po(g)
    v = (po and is_outerplanar(g), _free_of(g, ("K4", "K2_3", "K2_3_plus", "F1", "F2")))
    return [] if len(set(v)) == 1 else [("cor6.2", v)]


def _check_rooted(g):
    if not (g.n >= 2 and len(blocks_and_cut_vertices(g).blocks) == 1):
        return []
    out = []
    verdicts = set()
    for v in range(g.n):
        cert = recognize_biconnected_rooted(g, v)
        verdicts.add(cert.accepted)
        if cert.accepted != _po(g, v) or not cert.check(g):
            out.append((f"rooted[{v}]~2sat", (cert.accepted, _po(g, v))))
    if len(verdicts) > 1:
        out.append(("rooted verdict independent of root", tuple(sorted(verdicts))))
    return out


# suite name -> (check, class filter used for enumeration or None)
SUITES = {
    "oracle": (_check_oracle, None),
    "thm51": (_check_thm51, is_k4_minor_free),
    "thm61": (_check_thm61, is_outerplanar),
    "thm28": (_check_thm28, None),
    "co_def": (_check_co_definition, None),
    "sep2": (_check_sep2, None),
    "lemma29": (_check_lemma29, None),
    "lemma210": (_check_lemma210, None),
    "k4mf": (_check_k4mf, None),
    "cor52": (_check_cor52, None),
    "cor62": (_check_cor62, None),
    "rooted": (_check_rooted, is_k4_minor_free),
}


def _run_one(args):
    suite, g = args
    return to_graph6(g), SUITES[suite][0](g)


def crosscheck(n_max: int, suites, workers: int = 1) -> CrosscheckReport:
    """Run the selected suites on every connected graph with at most ``n_max`` vertices.

    Suites restricted to a class enumerate only that class.  With
    ``workers > 1`` graphs are checked in a process pool; the report is
    ordered by graph6 string either way.
    """
    suites = list(suites)
    unknown = [s for s in suites if s not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite(s): {', '.join(unknown)}")
    if n_max > MAX_BUILTIN_N:
        raise ValueError(f"built-in enumeration supports n_max <= {MAX_BUILTIN_N}")
    report = CrosscheckReport(n_max)
    jobs = []
    for suite in suites:
        within = SUITES[suite][1]
        for n in range(1, n_max + 1):
            jobs += [(suite, g) for g in enumerate_connected(n, within)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_run_one, jobs, chunksize=32))
    else:
        results = [_run_one(job) for job in jobs]
    report.graphs_checked = len(jobs)
    rows = []
    for (suite, _), (g6, found) in zip(jobs, results):
        rows += [(g6, f"{suite}:{pair}", verdicts) for pair, verdicts in found]
    report.disagreements = sorted(rows, key=lambda r: (r[0], r[1]))
    return report


def check_graphs(graphs, suite: str) -> CrosscheckReport:
    """Run one suite over an explicit list of graphs (e.g. an ingested graph6 corpus)."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    graphs = list(graphs)
    report = CrosscheckReport(max((g.n for g in graphs), default=0), len(graphs))
    for g in graphs:
        g6, found = _run_one((suite, g))
        report.disagreements += [(g6, f"{suite}:{pair}", v) for pair, v in found]
    report.disagreements.sort(key=lambda r: (r[0], r[1]))
    return report
