"""Immutable simple graphs, degree statistics, structural classes and named families."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input (self-loops, bad labels, missing edges)."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the sorted tuple of neighbours of ``v``. Instances are
    immutable, so they can be shared freely between worker processes.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows, expected {self.n}")
        for v, nbrs in enumerate(self.adj):
            for u in nbrs:
                if u == v:
                    raise GraphError(f"self-loop at vertex {v}")
                if v not in self.adj[u]:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adj)

    @cached_property
    def m(self) -> int:
        return sum(self.degrees) // 2

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adj[u]

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph from an edge list; duplicate pairs collapse silently."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for pair in edges:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def from_adjacency_sets(adj: Sequence[Iterable[int]]) -> Graph:
    return Graph(len(adj), tuple(tuple(sorted(s)) for s in adj))


# Degree statistics


@dataclass(frozen=True)
class DegreeProfile:
    n: int
    m: int
    max_deg: int
    min_deg: int
    # minimum degree over non-pendant vertices; None when every degree is <= 1
    min_nonpendant_deg: Optional[int]
    pendant_count: int
    avg_deg: Fraction
    degree_sequence: tuple[int, ...]  # non-increasing

    @property
    def delta1(self) -> Optional[int]:
        return self.min_nonpendant_deg


def degree_profile(g: Graph) -> DegreeProfile:
    if g.n < 1:
        raise GraphError("degree profile needs at least one vertex")
    degs = g.degrees
    nonpendant = [d for d in degs if d >= 2]
    return DegreeProfile(
        n=g.n,
        m=g.m,
        max_deg=max(degs),
        min_deg=min(degs),
        min_nonpendant_deg=min(nonpendant) if nonpendant else None,
        pendant_count=sum(1 for d in degs if d == 1),
        avg_deg=Fraction(2 * g.m, g.n),
        degree_sequence=tuple(sorted(degs, reverse=True)),
    )


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in g.adj[v]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen) == g.n


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp, stack = [], [s]
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in g.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        out.append(sorted(comp))
    return out


def bipartition(g: Graph) -> Optional[tuple[list[int], list[int]]]:
    """Two-colouring of a connected graph, or None if it has an odd cycle."""
    if g.n == 0:
        return [], []
    side = [-1] * g.n
    side[0] = 0
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in g.adj[v]:
            if side[u] < 0:
                side[u] = 1 - side[v]
                queue.append(u)
            elif side[u] == side[v]:
                return None
    if min(side) < 0:
        return None
    return [v for v in range(g.n) if side[v] == 0], [v for v in range(g.n) if side[v] == 1]


# Structural classes


@dataclass(frozen=True)
class GraphClass:
    connected: bool
    regular: Optional[int] = None  # common degree r when regular
    semiregular: Optional[tuple[int, int]] = None  # (s, r), s > r, exactly two degrees
    star: bool = False
    complete: bool = False
    complete_bipartite: Optional[tuple[int, int]] = None  # (p, q), p <= q
    cycle: bool = False
    path: bool = False
    k3: bool = False

    @property
    def is_regular(self) -> bool:
        return self.regular is not None

    def is_semiregular(self, s: int, r: int) -> bool:
        return self.semiregular == (max(s, r), min(s, r)) and s != r


def classify(g: Graph) -> GraphClass:
    """Flag the extremal families that appear in equality cases.

    Flags other than ``regular``/``semiregular`` require connectivity; a
    disconnected graph is reported with ``connected=False`` and only the
    degree-based flags set.
    """
    n, degs = g.n, g.degrees
    connected = is_connected(g)
    distinct = sorted(set(degs), reverse=True) if n else []
    regular = distinct[0] if len(distinct) == 1 else None
    semiregular = tuple(distinct) if len(distinct) == 2 else None
    if not connected or n == 0:
        return GraphClass(connected=False, regular=regular, semiregular=semiregular)

    m = g.m
    complete = m == n * (n - 1) // 2
    star = n >= 2 and m == n - 1 and max(degs) == n - 1
    cycle = n >= 3 and regular == 2
    path = m == n - 1 and max(degs, default=0) <= 2
    cb = None
    parts = bipartition(g)
    if parts is not None and n >= 2:
        a, b = parts
        if a and b and m == len(a) * len(b):
            cb = (min(len(a), len(b)), max(len(a), len(b)))
    return GraphClass(
        connected=True,
        regular=regular,
        semiregular=semiregular,
        star=star,
        complete=complete,
        complete_bipartite=cb,
        cycle=cycle,
        path=path,
        k3=complete and n == 3,
    )


# Derived graphs


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    adj = list(g.adj)
    adj[u] = tuple(w for w in adj[u] if w != v)
    adj[v] = tuple(w for w in adj[v] if w != u)
    return Graph(g.n, tuple(adj))


def complement(g: Graph) -> Graph:
    rows = []
    for v in range(g.n):
        nbrs = set(g.adj[v])
        rows.append(tuple(u for u in range(g.n) if u != v and u not in nbrs))
    return Graph(g.n, tuple(rows))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shifted = [(u + g1.n, v + g1.n) for u, v in g2.edges]
    return build_graph(g1.n + g2.n, list(g1.edges) + shifted)


def join(g1: Graph, g2: Graph) -> Graph:
    """g1 ∨ g2: disjoint union plus every edge between the two vertex sets."""
    base = disjoint_union(g1, g2)
    cross = [(u, g1.n + v) for u in range(g1.n) for v in range(g2.n)]
    return build_graph(base.n, list(base.edges) + cross)


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """Graph whose vertex ``i`` is ``order[i]`` of ``g``."""
    pos = {v: i for i, v in enumerate(order)}
    return build_graph(g.n, [(pos[u], pos[v]) for u, v in g.edges])


# Named families


def empty_graph(n: int) -> Graph:
    _check(n >= 0, "empty graph needs n >= 0")
    return build_graph(n, [])


def complete_graph(n: int) -> Graph:
    _check(n >= 1, "K_n needs n >= 1")
    return build_graph(n, combinations(range(n), 2))


def complete_bipartite(p: int, q: int) -> Graph:
    _check(p >= 1 and q >= 1, "K_{p,q} needs p, q >= 1")
    return build_graph(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def star(n: int) -> Graph:
    """K_{1,n-1} with centre 0."""
    _check(n >= 2, "star needs n >= 2")
    return complete_bipartite(1, n - 1)


def path_graph(n: int) -> Graph:
    _check(n >= 1, "P_n needs n >= 1")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    _check(n >= 3, "C_n needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def lnk(n: int, k: int) -> Graph:
    """L(n,k) = K_k ∨ complement(K_{n-k}); vertices 0..k-1 are the dominating ones."""
    _check(1 <= k <= n - 1, f"L(n,k) needs 1 <= k <= n-1, got n={n}, k={k}")
    return join(complete_graph(k), empty_graph(n - k))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def t_star() -> Graph:
    """Two copies of K_{1,3} with their centres (0 and 4) joined."""
    return build_graph(8, [(0, 1), (0, 2), (0, 3), (4, 5), (4, 6), (4, 7), (0, 4)])


FAMILIES = {
    "K": complete_graph,
    "Kpq": complete_bipartite,
    "star": star,
    "P": path_graph,
    "C": cycle_graph,
    "L": lnk,
    "empty": empty_graph,
    "petersen": petersen,
    "tstar": t_star,
}


def family(name: str, *params: int) -> Graph:
    try:
        ctor = FAMILIES[name]
    except KeyError:
        raise GraphError(f"unknown family {name!r}; known: {sorted(FAMILIES)}") from None
    try:
        return ctor(*params)
    except TypeError as exc:
        raise GraphError(f"bad parameters {params} for family {name!r}") from exc


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphError(msg)
