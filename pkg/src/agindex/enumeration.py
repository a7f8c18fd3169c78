"""Exhaustive generation of small graphs up to isomorphism.

Canonical forms come from an individualization-refinement search: vertices
are split by iterated neighbour-count refinement, remaining ties are broken by
trying every vertex of the first non-trivial cell, and the smallest
upper-triangle bitstring over all leaves is kept. Generation augments every
graph on n-1 vertices (connected or not) by one vertex joined to each subset
of the old vertices, deduplicates by canonical form, and filters
connectivity only when emitting.
"""

from __future__ import annotations

from functools import lru_cache
from pathlib import Path
from typing import Iterator, Sequence

from .graph import Graph, GraphError, build_graph, is_connected
from .graph_io import read_graph6_file

MAX_CANON_N = 10
MAX_ENUM_N = 8


def _masks(g: Graph) -> list[int]:
    return [sum(1 << u for u in nbrs) for nbrs in g.adj]


def _refine(cells: list[list[int]], masks: Sequence[int]) -> list[list[int]]:
    """Equitable refinement; split order depends only on neighbour counts."""
    while True:
        cell_masks = [sum(1 << v for v in c) for c in cells]
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                sig = tuple(bin(masks[v] & cm).count("1") for cm in cell_masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                changed = True
                out.extend(groups[s] for s in sorted(groups))
            else:
                out.append(cell)
        cells = out
        if not changed:
            return cells


def _code(order: Sequence[int], masks: Sequence[int]) -> int:
    """Upper-triangle bits in column order, first bit most significant."""
    code = 0
    n = len(order)
    for j in range(1, n):
        mj = masks[order[j]]
        for i in range(j):
            code = (code << 1) | ((mj >> order[i]) & 1)
    return code


def canonical_labeling(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Return (canonical code, vertex order realising it)."""
    n = g.n
    if n > MAX_CANON_N:
        raise GraphError(f"canonical form supports n <= {MAX_CANON_N}, got {n}")
    if n == 0:
        return 0, ()
    masks = _masks(g)
    best: list = [None, None]

    def search(cells: list[list[int]]) -> None:
        cells = _refine(cells, masks)
        target = next((k for k, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            code = _code(order, masks)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, tuple(order)
            return
        cell = cells[target]
        for v in cell:
            rest = [u for u in cell if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    # initial partition by degree; ascending degree
    by_deg: dict[int, list[int]] = {}
    for v in range(n):
        by_deg.setdefault(bin(masks[v]).count("1"), []).append(v)
    search([by_deg[d] for d in sorted(by_deg)])
    return best[0], best[1]


def canonical_form(g: Graph) -> str:
    """Canonical upper-triangle adjacency bitstring; equal iff isomorphic."""
    code, _ = canonical_labeling(g)
    nbits = g.n * (g.n - 1) // 2
    return format(code, f"0{nbits}b") if nbits else ""


def canonical_graph(g: Graph) -> Graph:
    _, order = canonical_labeling(g)
    pos = {v: i for i, v in enumerate(order)}
    return build_graph(g.n, [(pos[u], pos[v]) for u, v in g.edges])


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    return g1.n == g2.n and g1.m == g2.m and canonical_labeling(g1)[0] == canonical_labeling(g2)[0]


def _graph_from_code(n: int, code: int) -> Graph:
    nbits = n * (n - 1) // 2
    edges = []
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if (code >> k) & 1:
                edges.append((i, j))
            k -= 1
    return build_graph(n, edges)


@lru_cache(maxsize=None)
def _all_codes(n: int) -> tuple[int, ...]:
    """Canonical codes of all graphs on n vertices, sorted."""
    if n <= 1:
        return (0,)
    seen: set[int] = set()
    for parent_code in _all_codes(n - 1):
        parent = _graph_from_code(n - 1, parent_code)
        base_edges = list(parent.edges)
        for subset in range(1 << (n - 1)):
            extra = [(u, n - 1) for u in range(n - 1) if (subset >> u) & 1]
            child = build_graph(n, base_edges + extra)
            seen.add(canonical_labeling(child)[0])
    return tuple(sorted(seen))


def enumerate_all(n: int) -> Iterator[Graph]:
    """One canonically labelled representative per isomorphism class."""
    _check_range(n)
    for code in _all_codes(n):
        yield _graph_from_code(n, code)


def enumerate_connected(n: int) -> Iterator[Graph]:
    _check_range(n)
    for g in enumerate_all(n):
        if is_connected(g):
            yield g


def enumerate_connected_upto(n_max: int, n_min: int = 1) -> Iterator[Graph]:
    for n in range(n_min, n_max + 1):
        yield from enumerate_connected(n)


def enumerate_from_file(path: str | Path, strict: bool = False) -> Iterator[Graph]:
    yield from read_graph6_file(path, strict=strict)


def _check_range(n: int) -> None:
    if not 1 <= n <= MAX_ENUM_N:
        raise GraphError(f"enumeration supports 1 <= n <= {MAX_ENUM_N}, got {n}")
