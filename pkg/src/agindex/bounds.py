"""Upper and lower bounds on the arithmetic-geometric index with equality classes.

Notation: ``p`` pendant vertices, ``delta1`` the minimum non-pendant degree,
``Delta``/``delta`` the maximum/minimum degree. Each bound returns a
:class:`~agindex.checks.CheckReport` with ``lhs = AG(G)``.
"""

from __future__ import annotations

from typing import Callable

import mpmath

from .checks import (
    DEFAULT_TOL,
    CheckReport,
    GraphData,
    NegativeRadicand,
    evaluate,
    graph_data,
    not_applicable,
    radicand_anomaly,
    safe_sqrt,
)
from .graph import Graph
from .indices import index_vector

BOUND_IDS = ("T1", "C1", "T2", "C2", "T3", "C3", "T4", "C4", "T5", "T6")


def _pendant_or_regular(d: GraphData) -> bool:
    """Star, regular, or (Delta,1)-semiregular: the shared equality class of T1/T2/T4/T5/T6."""
    c = d.cls
    return c.is_regular or (c.semiregular is not None and c.semiregular[1] == 1)


def _base_check(d: GraphData, kind: str, bound_id: str):
    if not d.connected:
        return not_applicable(bound_id, kind, "graph is disconnected")
    if d.g.m == 0:
        return not_applicable(bound_id, kind, "graph has no edges")
    return None


def _needs_delta1(d: GraphData, kind: str, bound_id: str):
    pr = d.profile
    if pr.delta1 is None and pr.m != pr.pendant_count:
        return not_applicable(bound_id, kind, "delta1 undefined (no vertex of degree >= 2)")
    return None


class _Float:
    """Numeric backend for the bound formulas: IEEE doubles."""

    sqrt = staticmethod(safe_sqrt)

    @staticmethod
    def num(x) -> float:
        return float(x)


class _MP:
    """mpmath backend; callers set the working precision."""

    @staticmethod
    def sqrt(x):
        return mpmath.sqrt(x) if x >= 0 else safe_sqrt(float(x))

    @staticmethod
    def num(x):
        return mpmath.mpf(x)


def _run(bound_id: str, kind: str, g: Graph, tol: float, needs_delta1: bool,
         rhs_fn: Callable, extremal_fn: Callable[[GraphData], bool],
         extra_pre: Callable[[GraphData], str] | None = None) -> CheckReport:
    d = graph_data(g)
    pre = _base_check(d, kind, bound_id)
    if pre is None and needs_delta1:
        pre = _needs_delta1(d, kind, bound_id)
    if pre is None and extra_pre is not None:
        reason = extra_pre(d)
        if reason:
            pre = not_applicable(bound_id, kind, reason)
    if pre is not None:
        return pre
    try:
        rhs = rhs_fn(d, d.iv, _Float)
    except NegativeRadicand as exc:
        return radicand_anomaly(bound_id, kind, exc.args[0])
    return evaluate(bound_id, kind, d.iv.AG, rhs, extremal_fn(d), tol)


# Right-hand sides. ``iv`` carries the index values in the backend's precision;
# ``nb`` supplies sqrt and the conversion for integer quotients.


def _pendant_upper_part(d, nb):
    p, Delta = d.profile.pendant_count, d.profile.max_deg
    return nb.num(p * (Delta + 1)) / (2 * nb.sqrt(nb.num(Delta)))


def _pendant_lower_part(d, nb):
    p, d1 = d.profile.pendant_count, d.profile.delta1
    return nb.num(p * (d1 + 1)) / (2 * nb.sqrt(nb.num(d1))) if p else nb.num(0)


def _t1(d, iv, nb):
    pr = d.profile
    p, m, d1 = pr.pendant_count, pr.m, pr.delta1
    if m == p:
        return _pendant_upper_part(d, nb)
    rad = (m - p) * (iv.F + 2 * iv.M2 - p * (d1 + 1) ** 2)
    return _pendant_upper_part(d, nb) + nb.sqrt(nb.num(rad)) / (2 * d1)


def _c1(d, iv, nb):
    return nb.sqrt(nb.num(d.profile.m * (iv.F + 2 * iv.M2))) / (2 * d.profile.min_deg)


def _t2(d, iv, nb):
    pr = d.profile
    p, m, d1, Delta = pr.pendant_count, pr.m, pr.delta1, pr.max_deg
    if m == p:
        return _pendant_upper_part(d, nb)
    rad = iv.F + 2 * iv.M2 - p * (d1 + 1) ** 2 + 4 * Delta ** 2 * (m - p) * (m - p - 1)
    return _pendant_upper_part(d, nb) + nb.sqrt(nb.num(rad)) / (2 * d1)


def _c2(d, iv, nb):
    pr = d.profile
    rad = iv.F + 2 * iv.M2 + 4 * pr.m * (pr.m - 1) * pr.max_deg ** 2
    return nb.sqrt(nb.num(rad)) / (2 * pr.min_deg)


def _nonpendant_edge_cap(n, nb):
    """max of sqrt(x/y) + sqrt(y/x) over a non-pendant edge: degrees n-1 and 2."""
    return nb.sqrt(nb.num(n - 1) / 2) + nb.sqrt(nb.num(2) / (n - 1))


def _t3(d, iv, nb):
    # counts pendant EDGES, which equal pendant vertices except on K2
    n, m, pe = d.profile.n, d.profile.m, d.pendant_edges
    out = nb.num(pe * n) / (2 * nb.sqrt(nb.num(n - 1)))
    if m > pe:
        out += nb.num(m - pe) / 2 * _nonpendant_edge_cap(n, nb)
    return out


def _c3(d, iv, nb):
    return nb.num(d.profile.m) / 2 * _nonpendant_edge_cap(d.profile.n, nb)


def _polya_coefficient(Delta, d1, count, nb):
    """sqrt(2 c (Delta+d1) sqrt(Delta d1)) / (Delta + d1 + 2 sqrt(Delta d1))."""
    g = nb.sqrt(nb.num(Delta * d1))
    return nb.sqrt(2 * count * (Delta + d1) * g) / (Delta + d1 + 2 * g)


def _t4(d, iv, nb):
    pr = d.profile
    p, m, Delta = pr.pendant_count, pr.m, pr.max_deg
    if m == p:
        return _pendant_lower_part(d, nb)
    rad = iv.F + 2 * m * Delta ** 2 - p * (3 * Delta ** 2 + 1)
    coef = _polya_coefficient(Delta, pr.delta1, m - p, nb) / Delta
    return _pendant_lower_part(d, nb) + coef * nb.sqrt(nb.num(rad))


def _c4(d, iv, nb):
    pr = d.profile
    m, Delta, delta = pr.m, pr.max_deg, pr.min_deg
    rad = iv.F + 2 * m * Delta ** 2
    return _polya_coefficient(Delta, delta, m, nb) / Delta * nb.sqrt(nb.num(rad))


def _t5(d, iv, nb):
    pr = d.profile
    p, m, Delta = pr.pendant_count, pr.m, pr.max_deg
    if m == p:
        return _pendant_lower_part(d, nb)
    rad = iv.SDD - nb.num(p * (Delta ** 2 + 1)) / Delta + 2 * (m - p)
    return _pendant_lower_part(d, nb) + _polya_coefficient(Delta, pr.delta1, m - p, nb) * nb.sqrt(rad)


def _t6(d, iv, nb):
    pr = d.profile
    p, Delta = pr.pendant_count, pr.max_deg
    return _pendant_lower_part(d, nb) + nb.num(iv.M1 - p * (Delta + 1)) / (2 * Delta)


def _is_star_or_k3(d: GraphData) -> bool:
    return d.cls.star or d.cls.k3


def _regular(d: GraphData) -> bool:
    return d.cls.is_regular


def _min_deg_two(d: GraphData) -> str:
    return "" if d.profile.min_deg >= 2 else "minimum degree < 2"


def _pendant_free(d: GraphData) -> str:
    return "" if d.profile.pendant_count == 0 else "graph has pendant vertices"


def bound_t1(g: Graph, tol: float = DEFAULT_TOL) -> CheckReport:
    return _run("T1", "upper", g, tol, True, _t1, _pendant_or_regular)


def bound_c1(g: Graph, tol: float = DEFAULT_TOL) -> CheckReport:
    return _run("C1", "upper", g, tol, False, _c1, _regular)


def bound_t2(g: Graph, tol: float = DEFAULT_TOL) -> CheckReport:
    return _run("T2", "upper", g, tol, True, _t2, _pendant_or_regular)


def bound_c2(g: Graph, tol: float = DEFAULT_TOL) -> CheckReport:
    return _run("C2", "upper", g, tol, False, _c2, _regular)


def bound_t3(g: Graph, tol: float = DEFAULT_TOL) -> CheckReport:
    return _run("T3", "upper", g, tol, False, _t3, _is_star_or_k3)


def bound_c3(g: Graph, tol: float = DEFAULT_TOL) -> CheckReport:
    return _run("C3", "upper", g, tol, False, _c3, lambda d: d.cls.k3, _min_deg_two)


def bound_t4(g: Graph, tol: float = DEFAULT_TOL) -> CheckReport:
    return _run("T4", "lower", g, tol, True, _t4, _pendant_or_regular)


def bound_c4(g: Graph, tol: float = DEFAULT_TOL) -> CheckReport:
    return _run("C4", "lower", g, tol, False, _c4, _regular, _pendant_free)


def bound_t5(g: Graph, tol: float = DEFAULT_TOL) -> CheckReport:
    return _run("T5", "lower", g, tol, True, _t5, _pendant_or_regular)


def bound_t6(g: Graph, tol: float = DEFAULT_TOL) -> CheckReport:
    return _run("T6", "lower", g, tol, True, _t6, _pendant_or_regular)


_RHS = {
    "T1": _t1, "C1": _c1, "T2": _t2, "C2": _c2, "T3": _t3,
    "C3": _c3, "T4": _t4, "C4": _c4, "T5": _t5, "T6": _t6,
}

BOUNDS = {
    "T1": bound_t1, "C1": bound_c1, "T2": bound_t2, "C2": bound_c2, "T3": bound_t3,
    "C3": bound_c3, "T4": bound_t4, "C4": bound_c4, "T5": bound_t5, "T6": bound_t6,
}


def verify_bounds(g: Graph, tol: float = DEFAULT_TOL) -> list[CheckReport]:
    """One report per bound, in a fixed order; inapplicable ones say why."""
    return [BOUNDS[b](g, tol) for b in BOUND_IDS]


def trivial_lower_bound(g: Graph) -> float:
    """M1 / (2 Delta), which every connected graph's AG exceeds or meets."""
    d = graph_data(g)
    return d.iv.M1 / (2 * d.profile.max_deg)


def high_precision_slack(g: Graph, bound_id: str, digits: int = 50):
    """Slack of an applicable bound recomputed with ``digits`` significant digits.

    Used to arbitrate reports whose float slack sits inside the equality
    tolerance while the graph is outside the equality class.
    """
    report = BOUNDS[bound_id](g)
    if not report.applicable:
        raise ValueError(f"{bound_id} is not applicable: {report.reason}")
    d = graph_data(g)
    with mpmath.workdps(digits):
        iv = index_vector(g, precision=digits)
        rhs = _RHS[bound_id](d, iv, _MP)
        slack = rhs - iv.AG if report.kind == "upper" else iv.AG - rhs
        return +slack
