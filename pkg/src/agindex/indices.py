"""Degree-based topological indices: GA, AG, ABC, SDD, Zagreb M1/M2 and forgotten F.

Integer-valued indices (M1, M2, F) are exact. Radical indices are summed with
``math.fsum`` over edge terms sorted by their (smaller, larger) endpoint
degrees, so results do not depend on edge order. Passing ``precision=<digits>``
evaluates the radical indices with mpmath instead.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Optional, Union

import mpmath

from .graph import Graph, GraphError

Real = Union[float, mpmath.mpf]


def ga_term(a, b):
    return 2 * math.sqrt(a * b) / (a + b)


def ag_term(a, b):
    return (a + b) / (2 * math.sqrt(a * b))


def abc_term(a, b):
    # (1,1) edge: sqrt(0) = 0, which is well defined
    return math.sqrt((a + b - 2) / (a * b))


def sdd_term(a, b):
    return a / b + b / a


def _mp_terms(a: int, b: int):
    a, b = mpmath.mpf(a), mpmath.mpf(b)
    r = mpmath.sqrt(a * b)
    return 2 * r / (a + b), (a + b) / (2 * r), mpmath.sqrt((a + b - 2) / (a * b)), a / b + b / a


@dataclass(frozen=True)
class EdgeTerm:
    edge: tuple[int, int]
    du: int
    dv: int

    @property
    def ga(self) -> float:
        return ga_term(self.du, self.dv)

    @property
    def ag(self) -> float:
        return ag_term(self.du, self.dv)

    @property
    def abc(self) -> float:
        return abc_term(self.du, self.dv)

    @property
    def sdd(self) -> float:
        return sdd_term(self.du, self.dv)


@dataclass(frozen=True)
class IndexVector:
    GA: Real
    AG: Real
    ABC: Real
    SDD: Real
    M1: int
    M2: int
    F: int

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in ("GA", "AG", "ABC", "SDD", "M1", "M2", "F")}


def edge_terms(g: Graph) -> list[EdgeTerm]:
    degs = g.degrees
    terms = [EdgeTerm((u, v), degs[u], degs[v]) for u, v in g.edges]
    terms.sort(key=lambda t: (min(t.du, t.dv), max(t.du, t.dv), t.edge))
    return terms


def degree_pair_counts(g: Graph) -> Counter:
    """Multiset of unordered endpoint-degree pairs (small, large) over the edges."""
    degs = g.degrees
    return Counter((min(degs[u], degs[v]), max(degs[u], degs[v])) for u, v in g.edges)


def from_pair_counts(pairs: dict, precision: Optional[int] = None) -> IndexVector:
    """Evaluate every index from a {(du, dv): edge count} table."""
    items = sorted(pairs.items())
    m1 = sum(c * (a + b) for (a, b), c in items)
    m2 = sum(c * a * b for (a, b), c in items)
    f = sum(c * (a * a + b * b) for (a, b), c in items)
    if precision is None:
        ga = math.fsum(c * ga_term(a, b) for (a, b), c in items)
        ag = math.fsum(c * ag_term(a, b) for (a, b), c in items)
        abc = math.fsum(c * abc_term(a, b) for (a, b), c in items)
        sdd = math.fsum(c * sdd_term(a, b) for (a, b), c in items)
    else:
        with mpmath.workdps(precision):
            ga = ag = abc = sdd = mpmath.mpf(0)
            for (a, b), c in items:
                tg, ta, tb, ts = _mp_terms(a, b)
                ga += c * tg
                ag += c * ta
                abc += c * tb
                sdd += c * ts
            ga, ag, abc, sdd = (+x for x in (ga, ag, abc, sdd))
    return IndexVector(GA=ga, AG=ag, ABC=abc, SDD=sdd, M1=m1, M2=m2, F=f)


def index_vector(g: Graph, precision: Optional[int] = None) -> IndexVector:
    """All indices of ``g``; isolated vertices contribute nothing."""
    iv = from_pair_counts(degree_pair_counts(g), precision)
    # vertex forms of M1 and F must agree with the edge forms
    assert iv.M1 == sum(d * d for d in g.degrees)
    assert iv.F == sum(d ** 3 for d in g.degrees)
    return iv


def ga(g: Graph) -> float:
    return index_vector(g).GA


def ag(g: Graph) -> float:
    return index_vector(g).AG


# Closed forms for named families


def family_pair_counts(name: str, *params: int) -> dict:
    if name == "K":
        (n,) = params
        return {(n - 1, n - 1): comb(n, 2)} if n >= 2 else {}
    if name == "Kpq":
        p, q = sorted(params)
        return {(p, q): p * q}
    if name == "star":
        (n,) = params
        return {(1, n - 1): n - 1}
    if name == "C":
        (n,) = params
        return {(2, 2): n}
    if name == "P":
        (n,) = params
        if n == 1:
            return {}
        if n == 2:
            return {(1, 1): 1}
        out = {(1, 2): 2}
        if n >= 4:
            out[(2, 2)] = n - 3
        return out
    if name == "L":
        n, k = params
        if not 1 <= k <= n - 1:
            raise GraphError(f"L(n,k) needs 1 <= k <= n-1, got n={n}, k={k}")
        out = Counter()
        out[(n - 1, n - 1)] += comb(k, 2)
        out[(min(k, n - 1), max(k, n - 1))] += k * (n - k)
        return {key: c for key, c in out.items() if c}
    raise GraphError(f"no closed form for family {name!r}")


def family_closed_form(name: str, *params: int, precision: Optional[int] = None) -> IndexVector:
    return from_pair_counts(family_pair_counts(name, *params), precision)


def ga_lnk(n: int, k: int) -> float:
    """GA(L(n,k)) = C(k,2) + k(n-k) * 2 sqrt(k(n-1)) / (n+k-1)."""
    return comb(k, 2) + k * (n - k) * 2 * math.sqrt(k * (n - 1)) / (n + k - 1)


def ag_lnk(n: int, k: int) -> float:
    return comb(k, 2) + k * (n - k) * (n + k - 1) / (2 * math.sqrt(k * (n - 1)))
