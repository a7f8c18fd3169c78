"""Exact chromatic number and the chromatic-number inequalities involving GA and AG."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .checks import DEFAULT_TOL, FINDING, CheckReport, evaluate, graph_data, not_applicable
from .graph import Graph, GraphError, lnk
from .indices import ag_lnk, ga_lnk

DEFAULT_VERTEX_LIMIT = 16


@dataclass(frozen=True)
class ChromaticResult:
    chi: int
    coloring: tuple[int, ...]  # colour of each vertex, 0-based
    clique: tuple[int, ...]  # a maximum clique, the lower-bound witness


def is_proper_coloring(g: Graph, coloring) -> bool:
    return len(coloring) == g.n and all(coloring[u] != coloring[v] for u, v in g.edges)


def _masks(g: Graph) -> list[int]:
    return [sum(1 << u for u in nbrs) for nbrs in g.adj]


def max_clique(g: Graph) -> tuple[int, ...]:
    """Maximum clique by Bron-Kerbosch with pivoting on bitmasks."""
    masks = _masks(g)
    best = 0

    def expand(r: int, p: int, x: int) -> None:
        nonlocal best
        if p == 0 and x == 0:
            if bin(r).count("1") > bin(best).count("1"):
                best = r
            return
        if bin(r).count("1") + bin(p).count("1") <= bin(best).count("1"):
            return
        pivot = max(_bits(p | x), key=lambda u: bin(p & masks[u]).count("1"))
        for v in _bits(p & ~masks[pivot]):
            expand(r | (1 << v), p & masks[v], x & masks[v])
            p &= ~(1 << v)
            x |= 1 << v

    if g.n:
        expand(0, (1 << g.n) - 1, 0)
    return tuple(_bits(best))


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def dsatur(g: Graph) -> tuple[int, ...]:
    """Greedy DSATUR colouring; ties broken by degree, then lowest label."""
    n = g.n
    colors = [-1] * n
    seen: list[set[int]] = [set() for _ in range(n)]
    degs = g.degrees
    for _ in range(n):
        v = max((u for u in range(n) if colors[u] < 0),
                key=lambda u: (len(seen[u]), degs[u], -u))
        c = 0
        while c in seen[v]:
            c += 1
        colors[v] = c
        for w in g.adj[v]:
            seen[w].add(c)
    return tuple(colors)


def _k_coloring(g: Graph, k: int, clique: tuple[int, ...]) -> Optional[list[int]]:
    """Backtracking k-colouring in saturation order, with the clique precoloured."""
    n = g.n
    colors = [-1] * n
    for c, v in enumerate(clique):
        colors[v] = c
    # forbidden[v] bitmask of colours used by coloured neighbours
    forbidden = [0] * n
    for v in clique:
        for w in g.adj[v]:
            forbidden[w] |= 1 << colors[v]
    full = (1 << k) - 1
    degs = g.degrees

    def solve(remaining: int, used: int) -> bool:
        if remaining == 0:
            return True
        v, best = -1, (-1, -1)
        for u in range(n):
            if colors[u] < 0:
                key = (bin(forbidden[u]).count("1"), degs[u])
                if key > best:
                    v, best = u, key
        free = full & ~forbidden[v]
        # a colour index above `used` is interchangeable with any other unused one
        for c in range(min(used + 1, k)):
            if not (free >> c) & 1:
                continue
            colors[v] = c
            touched = [w for w in g.adj[v] if colors[w] < 0 and not (forbidden[w] >> c) & 1]
            for w in touched:
                forbidden[w] |= 1 << c
            if all(forbidden[w] != full for w in touched) and solve(remaining - 1, max(used, c + 1)):
                return True
            for w in touched:
                forbidden[w] &= ~(1 << c)
            colors[v] = -1
        return False

    if solve(n - len(clique), len(clique)):
        return colors
    return None


def chromatic_number(g: Graph, vertex_limit: int = DEFAULT_VERTEX_LIMIT) -> ChromaticResult:
    """Exact chromatic number with a verified colouring and clique witness."""
    if g.n > vertex_limit:
        raise GraphError(f"exact colouring limited to n <= {vertex_limit}, got {g.n}")
    if g.n == 0:
        return ChromaticResult(0, (), ())
    clique = max_clique(g)
    best = dsatur(g)
    ub = max(best) + 1
    chi = ub
    for k in range(len(clique), ub):
        found = _k_coloring(g, k, clique)
        if found is not None:
            best, chi = tuple(found), k
            break
    if not is_proper_coloring(g, best) or len(set(best)) != chi:
        raise AssertionError("colouring certificate failed verification")
    if any(not g.has_edge(u, v) for i, u in enumerate(clique) for v in clique[i + 1:]):
        raise AssertionError("clique witness is not a clique")
    return ChromaticResult(chi, best, clique)


def chi_lnk(n: int, k: int) -> int:
    """chi(L(n,k)): the k dominating vertices need distinct colours, the rest share one."""
    if not 1 <= k <= n - 1:
        raise GraphError(f"L(n,k) needs 1 <= k <= n-1, got n={n}, k={k}")
    if k == n - 1:
        return n
    return k + 1


def conjecture1_check(g: Graph, tol: float = DEFAULT_TOL,
                      vertex_limit: int = DEFAULT_VERTEX_LIMIT) -> CheckReport:
    """chi <= 2 GA / (average degree), equality conjectured only for K_n."""
    d = graph_data(g)
    if not d.connected or g.n < 2:
        return not_applicable("Conj1", "upper", "needs a connected graph with n >= 2", FINDING)
    chi = chromatic_number(g, vertex_limit).chi
    avg = 2 * g.m / g.n
    return evaluate("Conj1", "upper", chi, 2 * d.iv.GA / avg, d.cls.complete, tol, FINDING)


@dataclass(frozen=True)
class ChainReport:
    chi: int
    n: int
    bound: float  # 2 AG / average degree
    first_link: bool  # chi <= n
    second_link: bool  # n <= 2 AG / dbar
    equality: bool  # both links tight
    complete: bool

    @property
    def ok(self) -> bool:
        return self.first_link and self.second_link and self.equality == self.complete


def ag_chromatic_chain(g: Graph, tol: float = DEFAULT_TOL,
                       vertex_limit: int = DEFAULT_VERTEX_LIMIT) -> ChainReport:
    """chi <= n = 2m/dbar <= 2 AG/dbar."""
    d = graph_data(g)
    if not d.connected or g.n < 2:
        raise GraphError("chain needs a connected graph with n >= 2")
    chi = chromatic_number(g, vertex_limit).chi
    n = g.n
    # 2m/dbar is n exactly; kept explicit so the middle term is checked rather than assumed
    middle = Fraction(2 * g.m) / Fraction(2 * g.m, n)
    assert middle == n
    bound = 2 * d.iv.AG * n / (2 * g.m)
    second = bound >= n - tol
    equality = chi == n and abs(bound - n) <= tol
    return ChainReport(chi, n, bound, chi <= n, second, equality, d.cls.complete)


@dataclass
class Theorem8Report:
    k: int
    n_values: list[int]
    residuals: list[float]  # 2 GA / dbar - (k+1)
    threshold: Optional[int]  # smallest n* with residual >= 0 on [n*, n_max]
    growth: list[float] = field(default_factory=list)  # 2 GA / (dbar (k+1))

    def residual_at(self, n: int) -> float:
        return self.residuals[n - self.n_values[0]]

    def growth_at(self, n: int) -> float:
        return self.growth[n - self.n_values[0]]


def lnk_conjecture_bound(n: int, k: int) -> float:
    """2 GA(L(n,k)) / average degree, from closed forms."""
    m = math.comb(k, 2) + k * (n - k)
    return ga_lnk(n, k) * n / m


def theorem8_scan(k: int, n_max: int) -> Theorem8Report:
    """Residual of chi(L(n,k)) <= 2 GA / dbar up to n_max and the n past which it holds."""
    if k < 2 or n_max < k + 2:
        raise ValueError("need k >= 2 and n_max >= k + 2")
    ns = list(range(k + 2, n_max + 1))
    bounds = [lnk_conjecture_bound(n, k) for n in ns]
    residuals = [b - chi_lnk(n, k) for b, n in zip(bounds, ns)]
    threshold = None
    for n, r in zip(reversed(ns), reversed(residuals)):
        if r < 0:
            break
        threshold = n
    return Theorem8Report(k, ns, residuals, threshold, [b / (k + 1) for b in bounds])


@dataclass
class OpenQuestionReport:
    """Search for chi > 2 AG / Delta; ``ratio`` is chi Delta / (2 AG)."""

    graphs_scanned: int
    findings: list[tuple[str, int, float]]  # (graph6, chi, ratio) with ratio > 1
    max_ratio: float
    max_witness: Optional[str]


def ag_delta_open_question(graphs: Iterable[Graph], vertex_limit: int = DEFAULT_VERTEX_LIMIT,
                           tol: float = DEFAULT_TOL) -> OpenQuestionReport:
    from .graph_io import write_graph6

    findings = []
    best, witness, count = -math.inf, None, 0
    for g in graphs:
        d = graph_data(g)
        if not d.connected or g.m == 0:
            continue
        count += 1
        chi = chromatic_number(g, vertex_limit).chi
        ratio = chi * d.profile.max_deg / (2 * d.iv.AG)
        if ratio > best + tol:
            best, witness = ratio, write_graph6(g)
        if ratio > 1 + tol:
            findings.append((write_graph6(g), chi, ratio))
    findings.sort()
    return OpenQuestionReport(count, findings, best, witness)


def lnk_open_question_sweep(n_max: int) -> list[tuple[int, int, float]]:
    """(n, k, chi Delta / (2 AG)) over all L(n,k) with 2 <= n <= n_max, from closed forms."""
    out = []
    for n in range(2, n_max + 1):
        for k in range(1, n):
            out.append((n, k, chi_lnk(n, k) * (n - 1) / (2 * ag_lnk(n, k))))
    return out


def lnk_check(n: int, k: int) -> bool:
    """Closed form agrees with the exact solver on L(n,k)."""
    return chromatic_number(lnk(n, k)).chi == chi_lnk(n, k)
