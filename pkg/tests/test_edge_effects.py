import math

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from agindex.edge_effects import (
    EdgeLocalContext,
    SearchSpec,
    ag_delta_local,
    check_t11,
    check_t12,
    check_t13,
    check_t14,
    classify_edges,
    delta_global,
    edge_context,
    ga_delta_local,
    problem1_scan,
    realize_context,
    scan_uniform_contexts,
    search_t11,
)
from agindex.graph import (
    GraphError,
    complete_graph,
    cycle_graph,
    empty_graph,
    join,
    lnk,
    path_graph,
    star,
)
from agindex.graph_io import parse_graph6

ctx_of = EdgeLocalContext.from_degrees
BIG_TWOS = ctx_of(100, 500, [2] * 99, [2] * 499)
DIAMOND = join(complete_graph(2), empty_graph(2))  # hubs 0 and 1


def test_contexts():
    p3 = edge_context(path_graph(3), 0, 1)
    assert (p3.di, p3.dj, p3.neighbor_degrees_j()) == (1, 2, [1])
    assert p3.d_max_i is None and p3.d_min_i is None
    k4 = edge_context(complete_graph(4), 0, 1)
    assert (k4.di, k4.dj, k4.neighbor_degrees_i(), k4.neighbor_degrees_j()) == (3, 3, [3, 3], [3, 3])
    s = edge_context(star(5), 0, 1)
    assert (s.di, s.dj, s.neighbor_degrees_j()) == (1, 4, [1, 1, 1])


def test_pendant_endpoint_goes_first():
    assert edge_context(star(5), 3, 0) == edge_context(star(5), 0, 3)


def test_context_rejects_non_edge_and_bad_sizes():
    with pytest.raises(GraphError):
        edge_context(path_graph(3), 0, 2)
    with pytest.raises(GraphError):
        ctx_of(3, 2, [1], [1])


def test_ga_delta_examples():
    p3 = edge_context(path_graph(3), 0, 1)
    assert ga_delta_local(p3) == pytest.approx(4 * math.sqrt(2) / 3 - 1, abs=1e-12)
    k3 = edge_context(complete_graph(3), 0, 1)
    assert ga_delta_local(k3) == pytest.approx(3 - 4 * math.sqrt(2) / 3, abs=1e-12)
    assert ga_delta_local(ctx_of(1, 1)) == 1


def test_big_degree_two_context_value():
    assert abs(ga_delta_local(BIG_TWOS) - 0.5501) <= 5e-4
    assert ga_delta_local(BIG_TWOS) == pytest.approx(0.5500598591815513, abs=1e-12)


def test_ag_delta_examples():
    k3 = edge_context(complete_graph(3), 0, 1)
    assert ag_delta_local(k3) == pytest.approx(3 - 3 / math.sqrt(2), abs=1e-12)
    hub = edge_context(DIAMOND, 0, 1)
    assert ag_delta_local(hub) == pytest.approx(1 + 4 * 5 / (2 * math.sqrt(6)) - 4, abs=1e-12)
    p3 = edge_context(path_graph(3), 0, 1)
    assert ag_delta_local(p3) == pytest.approx(3 / math.sqrt(2) - 1, abs=1e-12)


def test_high_precision_deltas_agree():
    ctx = edge_context(path_graph(5), 1, 2)
    assert float(ga_delta_local(ctx, 50)) == pytest.approx(ga_delta_local(ctx), abs=1e-15)
    assert float(ag_delta_local(ctx, 50)) == pytest.approx(ag_delta_local(ctx), abs=1e-15)


def test_global_matches_local_p4_middle():
    g = path_graph(4)
    glob = delta_global(g, 1, 2)
    ctx = edge_context(g, 1, 2)
    assert glob.ga_delta == pytest.approx(ga_delta_local(ctx), abs=1e-12)
    assert glob.ag_delta == pytest.approx(ag_delta_local(ctx), abs=1e-12)
    assert glob.method == "global-recompute"


def test_t11_examples():
    ex1 = ctx_of(10, 1000, [1000] * 9, [1000] + [1] * 998)
    assert (ex1.d_r, ex1.d_s) == (1000, 1000)
    assert check_t11(ex1).cond_i
    assert check_t11(edge_context(complete_graph(4), 0, 1)).cond_i
    s = edge_context(star(5), 0, 1)
    assert (s.d_r, s.d_s) == (4, 1)
    assert not check_t11(s).cond_i


def test_t12_examples():
    v = check_t12(edge_context(path_graph(3), 0, 1))
    assert not v.cond_i and v.cond_ii
    v = check_t12(edge_context(star(5), 0, 1))
    assert not v.cond_i and v.cond_ii
    assert check_t12(ctx_of(1, 2, [], [4])).cond_i
    with pytest.raises(GraphError):
        check_t12(edge_context(complete_graph(3), 0, 1))


def test_t13_examples():
    v = check_t13(BIG_TWOS)
    assert v.cond_ii and not v.cond_i
    assert not check_t11(BIG_TWOS).cond_ii
    assert check_t13(edge_context(cycle_graph(6), 0, 1)).cond_i
    assert check_t13(edge_context(complete_graph(4), 0, 1)).cond_i
    with pytest.raises(GraphError):
        check_t13(edge_context(path_graph(3), 0, 1))


def test_t14_examples():
    # K2 joined with an edgeless H of order 4: Delta(H) = 0 < n - 3
    assert check_t14(edge_context(lnk(6, 2), 0, 1)).cond_i
    k3 = edge_context(complete_graph(3), 0, 1)
    assert not check_t14(k3).cond_i and ag_delta_local(k3) > 0
    pend = edge_context(star(5), 0, 1)
    assert check_t14(pend).cond_ii and ag_delta_local(pend) > 0


def test_classify_examples():
    rows = classify_edges(cycle_graph(5))
    assert all(r.ascending and r.local.ga_delta > 0 for r in rows)
    hub = [r for r in classify_edges(DIAMOND) if r.edge == (0, 1)][0]
    assert hub.descending and hub.local.ag_delta > 0
    for r in classify_edges(path_graph(3)):
        assert not r.ascending
        # a pendant endpoint counts as +inf in T14(i), so the edge is descending
        assert r.descending == check_t14(r.context).cond_i is True


def test_sweep_oracle_soundness_and_corollaries(connected7):
    worst = 0.0
    saw_nonnecessary = False
    saw_pendant_pos = saw_descending_pos = False
    for g in connected7:
        for r in classify_edges(g):
            worst = max(worst, abs(r.local.ga_delta - r.global_.ga_delta),
                        abs(r.local.ag_delta - r.global_.ag_delta))
            v = r.verdicts
            for t in ("T12", "T13"):
                if t in v and v[t].satisfied:
                    assert r.local.ga_delta > 1e-12, (g, r.edge, t)
            if "T14" in v and v["T14"].satisfied:
                assert r.local.ag_delta > 1e-12, (g, r.edge)
            if r.ascending:
                assert r.local.ga_delta > 0
            if r.descending:
                assert r.local.ag_delta > 0
                saw_descending_pos = True
            if r.context.pendant and r.local.ga_delta > 0:
                saw_pendant_pos = True
            gated = [v[t] for t in ("T12", "T13") if t in v]
            if r.local.ga_delta > 0 and gated and not any(x.satisfied for x in gated):
                saw_nonnecessary = True
    assert worst <= 1e-12
    assert saw_nonnecessary and saw_pendant_pos and saw_descending_pos


def test_local_against_matrix_oracle(connected7):
    for g in connected7[::11]:
        A = oracles.matrix(g.n, g.edges)
        for u, v in g.edges:
            ga, ag = oracles.delta(A, u, v)
            ctx = edge_context(g, u, v)
            assert ga_delta_local(ctx) == pytest.approx(ga, abs=1e-12)
            assert ag_delta_local(ctx) == pytest.approx(ag, abs=1e-12)


def _sign_witnesses():
    """Smallest contexts for the two sign phenomena absent from the n <= 7 corpus."""
    pendant = scan_uniform_contexts([1], range(2, 90), [], range(1, 12),
                                    lambda c: ga_delta_local(c) < 0)
    ascending = scan_uniform_contexts(range(2, 4), range(2, 4), range(2, 20), range(2, 20),
                                      lambda c: check_t13(c).cond_i and ag_delta_local(c) < 0)
    return pendant, ascending


def test_phenomena_found_by_configuration_search():
    pendant, ascending = _sign_witnesses()
    assert pendant and ascending
    for ctx in (pendant[0], ascending[0]):
        g = realize_context(ctx)
        assert edge_context(g, 0, 1) == ctx
        glob = delta_global(g, 0, 1)
        assert glob.ga_delta == pytest.approx(ga_delta_local(ctx), abs=1e-10)
        assert glob.ag_delta == pytest.approx(ag_delta_local(ctx), abs=1e-10)
    assert delta_global(realize_context(pendant[0]), 0, 1).ga_delta < 0
    asc = realize_context(ascending[0])
    assert [r for r in classify_edges(asc) if r.edge == (0, 1)][0].ascending
    assert delta_global(asc, 0, 1).ag_delta < 0
    # frozen baselines for the smallest witnesses
    assert ascending[0].witness_order == 31
    assert (pendant[0].dj, pendant[0].witness_order) == (72, 499)


def test_search_refutes_t11_default_space():
    findings = search_t11(SearchSpec(di_max=50, dj_max=2000))
    refuting = [f for f in findings if f.kind == "refutes-T11i"]
    assert refuting
    best = refuting[0]
    assert best.verified and best.ga_delta < 0 and best.verdicts["T11i"]
    g = realize_context(best.context)
    assert delta_global(g, 0, 1).ga_delta < 0
    assert best.witness_graph6 is not None and parse_graph6(best.witness_graph6) == g


def test_search_uniform_shapes_refute_too():
    findings = search_t11(SearchSpec(di_max=50, dj_max=2000, exceptions=False, verify_limit=1))
    assert any(f.kind == "refutes-T11i" and f.verified for f in findings)


def test_search_retrieves_big_degree_two_context():
    spec = SearchSpec(di_min=100, di_max=100, dj_min=500, dj_max=500, values=[2],
                      exceptions=False, verify_limit=1)
    (f,) = search_t11(spec)
    assert f.kind == "T11-not-necessary"
    assert f.context == BIG_TWOS
    assert abs(f.ga_delta - 0.5501) <= 5e-4 and f.verified


def test_regular_configuration_is_never_a_finding():
    for d in range(2, 12):
        spec = SearchSpec(di_min=d, di_max=d, dj_min=d, dj_max=d, values=[d], exceptions=False)
        assert search_t11(spec) == []


def test_empty_search_space():
    with pytest.raises(ValueError):
        search_t11(SearchSpec(di_min=5, di_max=4))


def test_realize_examples():
    assert realize_context(ctx_of(1, 2, [], [1])) == path_graph(3)
    g = realize_context(BIG_TWOS)
    assert g.n == 2 + 99 + 499 + 598
    assert edge_context(g, 0, 1) == BIG_TWOS
    ctx = ctx_of(3, 3, [3, 3], [3, 3])
    assert edge_context(realize_context(ctx), 0, 1) == ctx


def test_unchanged_index_scan_k2_and_cycles():
    rep = problem1_scan([complete_graph(2)], precision=50)
    assert rep.smallest_ga[0].value == 1 and not rep.smallest_ga[0].candidate
    for n in range(3, 12):
        ctx = edge_context(cycle_graph(n), 0, 1)
        assert ga_delta_local(ctx) > 0 and ag_delta_local(ctx) > 0


def test_unchanged_index_scan_threshold():
    rep = problem1_scan([path_graph(4)], precision=50)
    assert rep.threshold == mpmath.mpf(10) ** -25
    assert rep.candidates == []


def test_unchanged_index_scan_flags_tiny_values():
    rep = problem1_scan([path_graph(5), star(4)], precision=30, top=2)
    for r in rep.smallest_ga + rep.smallest_ag:
        assert r.candidate == (r.value < rep.threshold)


contexts = st.integers(1, 6).flatmap(lambda di: st.integers(2, 6).flatmap(
    lambda dj: st.tuples(
        st.just(di), st.just(dj),
        st.lists(st.integers(1, 6), min_size=di - 1, max_size=di - 1),
        st.lists(st.integers(1, 6), min_size=dj - 1, max_size=dj - 1))))


@settings(max_examples=150, deadline=None)
@given(contexts)
def test_realize_round_trip_and_local_equals_global(t):
    di, dj, ni, nj = t
    ctx = ctx_of(di, dj, ni, nj)
    g = realize_context(ctx)
    assert edge_context(g, 0, 1) == ctx
    glob = delta_global(g, 0, 1)
    assert glob.ga_delta == pytest.approx(ga_delta_local(ctx), abs=1e-11)
    assert glob.ag_delta == pytest.approx(ag_delta_local(ctx), abs=1e-11)
