"""graph6 and edge-list serialization.

graph6 follows McKay's format: an order header N(n) followed by the upper
triangle of the adjacency matrix in column order (x(0,1), x(0,2), x(1,2),
x(0,3), ...), packed big-endian into 6-bit groups, each offset by 63.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Iterator, Optional, TextIO

from .graph import Graph, GraphError, build_graph, from_adjacency_sets

log = logging.getLogger(__name__)

HEADER = ">>graph6<<"


class Graph6Error(GraphError):
    def __init__(self, msg: str, offset: Optional[int] = None):
        self.offset = offset
        super().__init__(msg if offset is None else f"{msg} (byte {offset})")


def _encode_order(n: int) -> str:
    if n < 0:
        raise Graph6Error(f"negative order {n}")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise Graph6Error(f"order {n} too large for graph6")


def _decode_order(s: str) -> tuple[int, int]:
    """Return (n, number of header bytes consumed)."""
    if not s:
        raise Graph6Error("empty graph6 string", 0)

    def chunk(start: int, count: int) -> int:
        if len(s) < start + count:
            raise Graph6Error("truncated order header", len(s))
        val = 0
        for k in range(start, start + count):
            c = ord(s[k]) - 63
            if not 0 <= c <= 63:
                raise Graph6Error(f"invalid character {s[k]!r} in order header", k)
            val = (val << 6) | c
        return val

    if s[0] != "~":
        return chunk(0, 1), 1
    if len(s) > 1 and s[1] == "~":
        return chunk(2, 6), 8
    return chunk(1, 3), 4


def write_graph6(g: Graph, header: bool = False) -> str:
    n = g.n
    bits = bytearray(n * (n - 1) // 2)
    for u, v in g.edges:  # u < v
        bits[v * (v - 1) // 2 + u] = 1
    out = [HEADER] if header else []
    out.append(_encode_order(n))
    chars = []
    for k in range(0, len(bits), 6):
        group = bits[k:k + 6]
        val = 0
        for b in group:
            val = (val << 1) | b
        val <<= 6 - len(group)
        chars.append(chr(val + 63))
    out.append("".join(chars))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    base = 0
    if s.startswith(HEADER):
        s = s[len(HEADER):]
        base = len(HEADER)
    n, used = _decode_order(s)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = s[used:]
    if len(body) != need:
        kind = "truncated" if len(body) < need else "overlong"
        raise Graph6Error(
            f"{kind} graph6 body: expected {need} bytes for n={n}, got {len(body)}",
            base + used + min(len(body), need),
        )
    adj: list[set[int]] = [set() for _ in range(n)]
    u, v = 0, 1
    k = 0
    for offset, ch in enumerate(body):
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise Graph6Error(f"invalid character {ch!r}", base + used + offset)
        for shift in range(5, -1, -1):
            if k >= nbits:
                if (val >> shift) & 1:
                    raise Graph6Error("nonzero padding bits", base + used + offset)
                continue
            if (val >> shift) & 1:
                adj[u].add(v)
                adj[v].add(u)
            k += 1
            u += 1
            if u == v:
                u, v = 0, v + 1
    return from_adjacency_sets(adj)


def iter_graph6(stream: TextIO, strict: bool = False) -> Iterator[Graph]:
    """Stream graphs from a graph6 file, one per line.

    Malformed lines are logged with their line number and skipped, or raised
    when ``strict`` is set.
    """
    for lineno, line in enumerate(stream, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            yield parse_graph6(line)
        except Graph6Error as exc:
            if strict:
                raise Graph6Error(f"line {lineno}: {exc}") from exc
            log.warning("skipping line %d: %s", lineno, exc)


def read_graph6_file(path: str | Path, strict: bool = False) -> Iterator[Graph]:
    with open(path) as fh:
        yield from iter_graph6(fh, strict=strict)


def write_graph6_file(graphs, path: str | Path) -> int:
    count = 0
    with open(path, "w") as fh:
        for g in graphs:
            fh.write(write_graph6(g) + "\n")
            count += 1
    return count


# Edge lists: one "u v" pair per line, 0-based; '#' starts a comment, a blank
# line separates graphs. "# n=K" fixes the order (for trailing isolated vertices).


def write_edgelist(g: Graph) -> str:
    lines = [f"# n={g.n}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    graphs = list(iter_edgelist(text.splitlines()))
    if len(graphs) != 1:
        raise GraphError(f"expected one graph, found {len(graphs)}")
    return graphs[0]


def iter_edgelist(lines, strict: bool = True) -> Iterator[Graph]:
    edges: list[tuple[int, int]] = []
    n: Optional[int] = None
    seen_any = False

    def flush():
        order = n if n is not None else 1 + max((max(e) for e in edges), default=-1)
        return build_graph(order, edges)

    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            if seen_any:
                yield flush()
                edges, n, seen_any = [], None, False
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("n="):
                n = int(body[2:])
                seen_any = True
            continue
        parts = line.split()
        try:
            if len(parts) != 2:
                raise ValueError(line)
            edges.append((int(parts[0]), int(parts[1])))
            seen_any = True
        except ValueError:
            if strict:
                raise GraphError(f"line {lineno}: expected 'u v', got {line!r}") from None
            log.warning("skipping line %d: %r", lineno, line)
    if seen_any:
        yield flush()


def read_graphs(path: str | Path, fmt: str = "graph6", strict: bool = False) -> Iterator[Graph]:
    if fmt == "graph6":
        yield from read_graph6_file(path, strict=strict)
    elif fmt == "edgelist":
        with open(path) as fh:
            yield from iter_edgelist(fh, strict=strict)
    else:
        raise GraphError(f"unknown format {fmt!r}")
