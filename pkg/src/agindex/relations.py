"""Sandwich relations between AG and GA, ABC, SDD."""

from __future__ import annotations

import math

from .checks import DEFAULT_TOL, CheckReport, evaluate, graph_data, not_applicable
from .graph import Graph

RELATION_IDS = ("T7L", "T7R", "C5", "T9L", "T9R", "ABCremark", "T10L", "T10R")


def _pre(g: Graph, rid: str, kind: str, min_delta: int = 1):
    d = graph_data(g)
    if not d.connected:
        return d, not_applicable(rid, kind, "graph is disconnected")
    if d.g.n < 2:
        return d, not_applicable(rid, kind, "needs n >= 2")
    if d.profile.min_deg < min_delta:
        return d, not_applicable(rid, kind, f"minimum degree < {min_delta}")
    return d, None


def relation_t7(g: Graph, tol: float = DEFAULT_TOL) -> tuple[CheckReport, CheckReport]:
    """GA <= AG <= (delta+n-1)^2 / (4 delta (n-1)) * GA."""
    d, pre = _pre(g, "T7L", "lower")
    if pre is not None:
        return pre, not_applicable("T7R", "upper", pre.reason)
    n, delta = d.profile.n, d.profile.min_deg
    coef = (delta + n - 1) ** 2 / (4 * delta * (n - 1))
    left = evaluate("T7L", "lower", d.iv.AG, d.iv.GA, d.cls.is_regular, tol)
    right = evaluate("T7R", "upper", d.iv.AG, coef * d.iv.GA, d.cls.star or d.cls.complete, tol)
    return left, right


def relation_c5(g: Graph, tol: float = DEFAULT_TOL) -> CheckReport:
    d, pre = _pre(g, "C5", "upper")
    if pre is not None:
        return pre
    n = d.profile.n
    return evaluate("C5", "upper", d.iv.AG, n * n / (4 * (n - 1)) * d.iv.GA, d.cls.star, tol)


def relation_t9(g: Graph, tol: float = DEFAULT_TOL) -> tuple[CheckReport, CheckReport]:
    """delta/sqrt(2 delta - 2) ABC <= AG <= (n-1)/sqrt(2n-4) ABC, for delta >= 2."""
    d, pre = _pre(g, "T9L", "lower", min_delta=2)
    if pre is not None:
        return pre, not_applicable("T9R", "upper", pre.reason)
    n, delta, abc = d.profile.n, d.profile.min_deg, d.iv.ABC
    left = evaluate("T9L", "lower", d.iv.AG, delta / math.sqrt(2 * delta - 2) * abc,
                    d.cls.is_regular, tol)
    right = evaluate("T9R", "upper", d.iv.AG, (n - 1) / math.sqrt(2 * n - 4) * abc,
                     d.cls.complete, tol)
    return left, right


def abc_remark(g: Graph, tol: float = DEFAULT_TOL) -> CheckReport:
    """AG >= sqrt(2) ABC when delta >= 2, with equality only on cycles."""
    d, pre = _pre(g, "ABCremark", "lower", min_delta=2)
    if pre is not None:
        return pre
    return evaluate("ABCremark", "lower", d.iv.AG, math.sqrt(2) * d.iv.ABC, d.cls.cycle, tol)


def relation_t10(g: Graph, tol: float = DEFAULT_TOL) -> tuple[CheckReport, CheckReport]:
    """SDD-sandwich; left equality on stars and complete graphs, right on regular graphs."""
    d, pre = _pre(g, "T10L", "lower")
    if pre is not None:
        return pre, not_applicable("T10R", "upper", pre.reason)
    n, delta, sdd = d.profile.n, d.profile.min_deg, d.iv.SDD
    coef = (delta + n - 1) * math.sqrt(delta * (n - 1)) / (2 * (delta ** 2 + (n - 1) ** 2))
    left = evaluate("T10L", "lower", d.iv.AG, coef * sdd, d.cls.star or d.cls.complete, tol)
    right = evaluate("T10R", "upper", d.iv.AG, sdd / 2, d.cls.is_regular, tol)
    return left, right


def verify_relations(g: Graph, tol: float = DEFAULT_TOL) -> list[CheckReport]:
    t7l, t7r = relation_t7(g, tol)
    t9l, t9r = relation_t9(g, tol)
    t10l, t10r = relation_t10(g, tol)
    return [t7l, t7r, relation_c5(g, tol), t9l, t9r, abc_remark(g, tol), t10l, t10r]
