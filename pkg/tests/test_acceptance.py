"""Acceptance suite: twelve criteria, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v`` (the lines are printed in the
terminal summary) or directly with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import math
import time

import pytest

from agindex.bounds import verify_bounds
from agindex.chromatic import ag_chromatic_chain, conjecture1_check, theorem8_scan
from agindex.edge_effects import (
    EdgeLocalContext,
    SearchSpec,
    check_t11,
    check_t13,
    classify_edges,
    delta_global,
    ga_delta_local,
    problem1_scan,
    realize_context,
    search_t11,
)
from agindex.enumeration import _all_codes, enumerate_connected
from agindex.graph import complete_graph, path_graph, star
from agindex.indices import index_vector
from agindex.relations import verify_relations

RESULTS: dict[int, tuple[bool, str]] = {}
_GRAPHS: list = []


def graphs_2_to_7():
    if not _GRAPHS:
        _GRAPHS.extend(g for n in range(2, 8) for g in enumerate_connected(n))
    return _GRAPHS


def criterion_1():
    k4, k14, p4 = index_vector(complete_graph(4)), index_vector(star(5)), index_vector(path_graph(4))
    checks = [
        (k4.GA, 6), (k14.AG, 5), (k14.ABC, 2 * math.sqrt(3)), (k14.SDD, 17),
        (p4.GA, 1 + 4 * math.sqrt(2) / 3), (p4.AG, 1 + 3 / math.sqrt(2)),
    ]
    worst = max(abs(a - b) for a, b in checks)
    return worst <= 1e-12, f"max deviation {worst:.2e}"


def _all_reports():
    for g in graphs_2_to_7():
        for r in verify_bounds(g) + verify_relations(g):
            if r.applicable:
                yield g, r


def criterion_2():
    t = time.perf_counter()
    graphs = graphs_2_to_7()
    instances = violations = 0
    for _, r in _all_reports():
        instances += 1
        violations += not r.holds
    elapsed = time.perf_counter() - t
    ok = len(graphs) == 995 and violations == 0 and elapsed < 60
    return ok, f"{len(graphs)} graphs, {instances} instances, {violations} violations, {elapsed:.1f}s"


def criterion_3():
    mismatches = [(r.check_id, g, r.slack) for g, r in _all_reports()
                  if r.equality != r.extremal_match]
    detail = f"{len(mismatches)} mismatches"
    if mismatches:
        from agindex.graph_io import write_graph6

        detail += ": " + ", ".join(f"{cid} on {write_graph6(g)} (slack {s:.3e})"
                                   for cid, g, s in mismatches)
    return not mismatches, detail


def criterion_4():
    worst, edges = 0.0, 0
    for g in graphs_2_to_7():
        for r in classify_edges(g):
            edges += 1
            worst = max(worst, abs(r.local.ga_delta - r.global_.ga_delta),
                        abs(r.local.ag_delta - r.global_.ag_delta))
    return worst <= 1e-12, f"{edges} edges, max |local - global| {worst:.2e}"


def criterion_5():
    bad, satisfied = 0, 0
    for g in graphs_2_to_7():
        for r in classify_edges(g):
            for t, v in r.verdicts.items():
                if t == "T11" or not v.satisfied:
                    continue
                satisfied += 1
                delta = r.local.ag_delta if t == "T14" else r.local.ga_delta
                bad += not delta > 1e-12
    return bad == 0, f"{satisfied} satisfied condition instances, {bad} without a strict drop"


def criterion_6():
    ctx = EdgeLocalContext.from_degrees(100, 500, [2] * 99, [2] * 499)
    d = ga_delta_local(ctx)
    t13, t11 = check_t13(ctx), check_t11(ctx)
    ok = abs(d - 0.5501) <= 5e-4 and t13.cond_ii and not t11.cond_ii
    return ok, f"gaDelta {d:.6f}, T13(ii) {t13.cond_ii}, T11(ii) {t11.cond_ii}"


def criterion_7():
    t = time.perf_counter()
    findings = search_t11(SearchSpec(di_max=50, dj_max=2000))
    refuting = [f for f in findings if f.kind == "refutes-T11i"]
    elapsed = time.perf_counter() - t
    if not refuting:
        return False, "no T11(i)-satisfying configuration with gaDelta < 0"
    best = refuting[0]
    g = realize_context(best.context)
    glob = delta_global(g, 0, 1).ga_delta
    ok = best.verified and glob < 0 and best.verdicts["T11i"] and elapsed < 300
    return ok, (f"{len(refuting)} refuting configurations; smallest witness n={g.n}, "
                f"di={best.context.di}, dj={best.context.dj}, global gaDelta {glob:.4g}, {elapsed:.1f}s")


def criterion_8():
    pend_neg = pend_pos = asc_neg = desc_pos = 0
    for g in graphs_2_to_7():
        for r in classify_edges(g):
            if r.context.pendant:
                pend_neg += r.local.ga_delta < 0
                pend_pos += r.local.ga_delta > 0
            if r.ascending:
                asc_neg += r.local.ag_delta < 0
            if r.descending:
                desc_pos += r.local.ag_delta > 0
    ok = pend_neg > 0 and pend_pos > 0 and asc_neg > 0 and desc_pos > 0
    return ok, (f"pendant gaDelta<0: {pend_neg}, pendant gaDelta>0: {pend_pos}, "
                f"ascending agDelta<0: {asc_neg}, descending agDelta>0: {desc_pos}")


def criterion_9():
    chain_bad = conj = equal_k = 0
    for g in graphs_2_to_7():
        chain = ag_chromatic_chain(g)
        chain_bad += not chain.ok
        equal_k += chain.equality
        conj += conjecture1_check(g).anomaly is not None
    ok = chain_bad == 0 and conj == 0
    return ok, f"chain failures {chain_bad}, chain equalities {equal_k} (K2..K7), GA chromatic findings {conj}"


def criterion_10():
    parts, ok = [], True
    for k in (2, 3, 4, 5):
        rep = theorem8_scan(k, 2000)
        holds = rep.threshold is not None and all(
            r >= 0 for n, r in zip(rep.n_values, rep.residuals) if n >= rep.threshold)
        grows = rep.growth_at(2000) > rep.growth_at(1000)
        ok &= holds and grows
        parts.append(f"k={k}: n*={rep.threshold}")
    return ok, ", ".join(parts)


def criterion_11():
    from oracles import labeled_connected_classes

    _all_codes.cache_clear()
    t = time.perf_counter()
    counts = [sum(1 for _ in enumerate_connected(n)) for n in range(2, 8)]
    elapsed = time.perf_counter() - t
    oracle = [len(labeled_connected_classes(n)) for n in range(2, 7)]
    ok = counts[:5] == oracle == [1, 2, 6, 21, 112] and counts[5] == 853 and elapsed < 30
    return ok, f"counts {counts}, oracle {oracle}, generation {elapsed:.1f}s"


def criterion_12():
    rep = problem1_scan(graphs_2_to_7(), precision=50)
    records = rep.smallest_ga + rep.smallest_ag
    unflagged = [r for r in records if r.value < rep.threshold and not r.candidate]
    ok = bool(rep.smallest_ga and rep.smallest_ag) and not unflagged and rep.edges_scanned > 0
    g, a = rep.smallest_ga[0], rep.smallest_ag[0]
    return ok, (f"{rep.edges_scanned} edges; min |gaDelta| {float(g.value):.6g} on {g.graph6} {g.edge}, "
                f"min |agDelta| {float(a.value):.6g} on {a.graph6} {a.edge}, "
                f"{len(rep.candidates)} candidates")


CRITERIA = {i: globals()[f"criterion_{i}"] for i in range(1, 13)}


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    ok, detail = CRITERIA[number]()
    RESULTS[number] = (ok, detail)
    assert ok, detail


def summary_lines() -> list[str]:
    return [f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
            for n, (ok, detail) in sorted(RESULTS.items())]


if __name__ == "__main__":
    import sys
    from pathlib import Path

    sys.path.insert(0, str(Path(__file__).parent))
    for n, fn in CRITERIA.items():
        RESULTS[n] = fn()
        print(summary_lines()[-1], flush=True)
    sys.exit(0 if all(ok for ok, _ in RESULTS.values()) else 1)
