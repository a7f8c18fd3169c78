"""Shared report type for inequality checks and the per-graph data they consume."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .graph import DegreeProfile, Graph, GraphClass, classify, degree_profile, is_connected
from .indices import IndexVector, index_vector

DEFAULT_TOL = 1e-9
RADICAND_NOISE = 1e-12

ASSERTION = "assertion"
FINDING = "finding"


class NegativeRadicand(ArithmeticError):
    pass


def safe_sqrt(x: float) -> float:
    """sqrt that absorbs rounding noise around zero and rejects real negatives."""
    if x < 0:
        if x >= -RADICAND_NOISE:
            return 0.0
        raise NegativeRadicand(x)
    return math.sqrt(x)


@dataclass(frozen=True)
class CheckReport:
    """Evaluation of one inequality ``lhs <= rhs`` (upper) or ``lhs >= rhs`` (lower).

    ``slack`` is oriented so that a nonnegative value means the inequality
    holds. ``extremal_match`` records whether the graph belongs to the class
    the result names as its equality case; ``equality`` must agree with it.
    """

    check_id: str
    kind: str  # "upper" or "lower"
    applicable: bool
    reason: str = ""
    lhs: float = math.nan
    rhs: float = math.nan
    slack: float = math.nan
    holds: bool = True
    equality: bool = False
    extremal_match: bool = False
    anomaly: Optional[str] = None
    severity: str = ASSERTION

    @property
    def ok(self) -> bool:
        return not self.applicable or self.anomaly is None


def not_applicable(check_id: str, kind: str, reason: str, severity: str = ASSERTION) -> CheckReport:
    return CheckReport(check_id, kind, applicable=False, reason=reason, severity=severity)


def evaluate(check_id: str, kind: str, lhs: float, rhs: float, extremal: bool,
             tol: float = DEFAULT_TOL, severity: str = ASSERTION) -> CheckReport:
    slack = rhs - lhs if kind == "upper" else lhs - rhs
    holds = slack >= -tol
    equality = abs(slack) <= tol
    anomaly = None
    if not holds:
        anomaly = "violation"
    elif equality != extremal:
        anomaly = "equality without extremal class" if equality else "extremal class without equality"
    return CheckReport(check_id, kind, True, "", float(lhs), float(rhs), float(slack),
                       holds, equality, extremal, anomaly, severity)


def radicand_anomaly(check_id: str, kind: str, value: float, severity: str = ASSERTION) -> CheckReport:
    return CheckReport(check_id, kind, True, "", anomaly=f"negative radicand {value!r}",
                       holds=False, severity=severity)


@dataclass(frozen=True)
class GraphData:
    g: Graph
    connected: bool
    profile: DegreeProfile
    iv: IndexVector
    cls: GraphClass

    @property
    def pendant_edges(self) -> int:
        degs = self.g.degrees
        return sum(1 for u, v in self.g.edges if degs[u] == 1 or degs[v] == 1)


@lru_cache(maxsize=8192)
def graph_data(g: Graph) -> GraphData:
    return GraphData(g, is_connected(g), degree_profile(g), index_vector(g), classify(g))
