"""Command-line front end.

Exit status: 0 clean, 1 assertion violations or anomalies (or findings with
``--strict``), 2 bad input or other errors.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Optional, Sequence

from .bounds import verify_bounds
from .chromatic import ag_chromatic_chain, conjecture1_check, theorem8_scan
from .checks import DEFAULT_TOL, graph_data
from .edge_effects import SearchSpec, classify_edges, problem1_scan, search_t11
from .enumeration import enumerate_all, enumerate_connected
from .graph import Graph, GraphError, family
from .graph_io import read_graphs, write_graph6
from .relations import verify_relations
from .report import emit, write_json

log = logging.getLogger("agindex")

EXIT_OK, EXIT_FINDINGS, EXIT_ERROR = 0, 1, 2
DELTA_TOL = 1e-12


@dataclass(frozen=True)
class RunConfig:
    command: str
    source: str  # "file", "family", "enumerate" or "none"
    tol: float = DEFAULT_TOL
    precision: int = 50
    out: Optional[str] = None
    jobs: int = 1
    strict: bool = False

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError("--tol must be positive")
        if self.precision < 15:
            raise ValueError("--precision must be at least 15")
        if self.jobs < 1:
            raise ValueError("--jobs must be at least 1")


# Input


def _parse_k(text: Optional[str]) -> list[int]:
    if text is None:
        return []
    if ".." in text:
        lo, hi = text.split("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(x) for x in text.split(",")]


def _family_graph(args) -> Graph:
    name = args.family
    ks = _parse_k(args.k)
    if name in ("K", "star", "P", "C", "empty"):
        params = (args.n,)
    elif name == "L":
        if len(ks) != 1:
            raise GraphError("family L needs a single --k")
        params = (args.n, ks[0])
    elif name == "Kpq":
        params = (args.p, args.q)
    else:
        params = ()
    if any(p is None for p in params):
        raise GraphError(f"missing parameters for family {name!r}")
    return family(name, *params)


def load_graphs(args) -> list[Graph]:
    if args.input:
        return list(read_graphs(args.input, args.format, strict=args.strict))
    if args.family:
        return [_family_graph(args)]
    if args.enumerate_n is not None:
        return list(enumerate_connected(args.enumerate_n))
    if args.enumerate_upto is not None:
        return [g for n in range(2, args.enumerate_upto + 1) for g in enumerate_connected(n)]
    raise GraphError("no input: give --in, --family, --enumerate-n or --enumerate-upto")


def _source(args) -> str:
    if getattr(args, "input", None):
        return "file"
    if getattr(args, "family", None):
        return "family"
    if getattr(args, "enumerate_n", None) is not None or getattr(args, "enumerate_upto", None) is not None:
        return "enumerate"
    return "none"


# Output


@contextmanager
def _output(out: Optional[str], default_fmt: str = "csv"):
    if out is None or out in ("csv", "json"):
        yield (out or default_fmt), sys.stdout
        return
    path = Path(out)
    fmt = "json" if path.suffix == ".json" else "csv"
    with open(path, "w", newline="") as fh:
        yield fmt, fh


# Parallel map with order-preserving merge


def _apply_chunk(job):
    fn, chunk = job
    return [fn(x) for x in chunk]


def parallel_map(fn: Callable, items: Sequence, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    size = max(1, len(items) // (jobs * 4))
    chunks = [items[i:i + size] for i in range(0, len(items), size)]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        parts = list(ex.map(_apply_chunk, [(fn, c) for c in chunks]))
    return [r for part in parts for r in part]


# Per-graph workers (top level so they pickle)


INDEX_COLUMNS = ["graph6", "n", "m", "GA", "AG", "ABC", "SDD", "M1", "M2", "F"]
CHECK_COLUMNS = ["graph6", "check_id", "kind", "lhs", "rhs", "slack", "holds", "equality",
                 "extremal_match", "anomaly", "severity"]


def _index_row(g: Graph) -> dict:
    iv = graph_data(g).iv
    return {"graph6": write_graph6(g), "n": g.n, "m": g.m, **iv.as_dict()}


def _check_rows(reports, g6: str) -> list[dict]:
    return [{"graph6": g6, "check_id": r.check_id, "kind": r.kind, "lhs": r.lhs, "rhs": r.rhs,
             "slack": r.slack, "holds": r.holds, "equality": r.equality,
             "extremal_match": r.extremal_match, "anomaly": r.anomaly or "", "severity": r.severity}
            for r in reports if r.applicable]


class _BoundsWorker:
    def __init__(self, tol):
        self.tol = tol

    def __call__(self, g):
        return _check_rows(verify_bounds(g, self.tol), write_graph6(g))


class _RelationsWorker:
    def __init__(self, tol):
        self.tol = tol

    def __call__(self, g):
        return _check_rows(verify_relations(g, self.tol), write_graph6(g))


CHROMATIC_COLUMNS = ["graph6", "n", "chi", "conj1_rhs", "conj1_slack", "conj1_anomaly",
                     "chain_bound", "chain_ok", "chi_delta_over_2ag", "open_question_finding"]


class _ChromaticWorker:
    def __init__(self, tol):
        self.tol = tol

    def __call__(self, g):
        d = graph_data(g)
        if not d.connected or g.n < 2:
            return None
        c1 = conjecture1_check(g, self.tol)
        chain = ag_chromatic_chain(g, self.tol)
        ratio = chain.chi * d.profile.max_deg / (2 * d.iv.AG)
        return {"graph6": write_graph6(g), "n": g.n, "chi": chain.chi, "conj1_rhs": c1.rhs,
                "conj1_slack": c1.slack, "conj1_anomaly": c1.anomaly or "",
                "chain_bound": chain.bound, "chain_ok": chain.ok, "chi_delta_over_2ag": ratio,
                "open_question_finding": ratio > 1 + self.tol}


EDGE_COLUMNS = ["graph6", "u", "v", "di", "dj", "gaDelta", "agDelta", "gaDeltaGlobal",
                "agDeltaGlobal", "T11i", "T11ii", "T12i", "T12ii", "T13i", "T13ii", "T14i", "T14ii",
                "ascending", "descending", "violation"]


def edge_violation(r) -> str:
    """Non-empty when a local/global mismatch or an unsound sufficient condition is seen."""
    problems = []
    if abs(r.local.ga_delta - r.global_.ga_delta) > DELTA_TOL:
        problems.append("GA local/global mismatch")
    if abs(r.local.ag_delta - r.global_.ag_delta) > DELTA_TOL:
        problems.append("AG local/global mismatch")
    for t in ("T12", "T13"):
        if t in r.verdicts and r.verdicts[t].satisfied and not r.local.ga_delta > DELTA_TOL:
            problems.append(f"{t} satisfied but GA does not drop")
    if "T14" in r.verdicts and r.verdicts["T14"].satisfied and not r.local.ag_delta > DELTA_TOL:
        problems.append("T14 satisfied but AG does not drop")
    return "; ".join(problems)


def _edge_rows(g: Graph) -> list[dict]:
    g6 = write_graph6(g)
    rows = []
    for r in classify_edges(g):
        row = {"graph6": g6, "u": r.edge[0], "v": r.edge[1], "di": r.context.di,
               "dj": r.context.dj, "gaDelta": r.local.ga_delta, "agDelta": r.local.ag_delta,
               "gaDeltaGlobal": r.global_.ga_delta, "agDeltaGlobal": r.global_.ag_delta,
               "ascending": r.ascending, "descending": r.descending, "violation": edge_violation(r)}
        row.update(r.flat_verdicts())
        rows.append(row)
    return rows


# Commands


def cmd_indices(cfg: RunConfig, args) -> int:
    rows = parallel_map(_index_row, load_graphs(args), cfg.jobs)
    with _output(cfg.out) as (fmt, fh):
        emit(rows, INDEX_COLUMNS, fmt, fh)
    return EXIT_OK


def _run_checks(cfg: RunConfig, args, worker) -> int:
    graphs = load_graphs(args)
    rows = [r for part in parallel_map(worker, graphs, cfg.jobs) for r in part]
    rows.sort(key=lambda r: (r["graph6"], r["check_id"]))
    violations = sum(1 for r in rows if not r["holds"])
    anomalies = sum(1 for r in rows if r["anomaly"])
    summary = {"graphs": len(graphs), "instances": len(rows), "violations": violations,
               "anomalies": anomalies}
    with _output(cfg.out) as (fmt, fh):
        emit(rows, CHECK_COLUMNS, fmt, fh, summary)
    log.info("%d graphs, %d applicable instances, %d violations, %d anomalies",
             len(graphs), len(rows), violations, anomalies)
    return EXIT_FINDINGS if anomalies else EXIT_OK


def cmd_verify_bounds(cfg, args) -> int:
    return _run_checks(cfg, args, _BoundsWorker(cfg.tol))


def cmd_verify_relations(cfg, args) -> int:
    return _run_checks(cfg, args, _RelationsWorker(cfg.tol))


def cmd_chromatic(cfg: RunConfig, args) -> int:
    if args.family == "L" and args.n_max is not None:
        ks = _parse_k(args.k) or [2]
        rows = []
        for k in ks:
            rep = theorem8_scan(k, args.n_max)
            half = max(k + 2, args.n_max // 2)
            rows.append({"k": k, "n_max": args.n_max, "threshold": rep.threshold,
                         "residual_at_n_max": rep.residual_at(args.n_max),
                         "growth_at_half": rep.growth_at(half),
                         "growth_at_n_max": rep.growth_at(args.n_max)})
        with _output(cfg.out) as (fmt, fh):
            emit(rows, ["k", "n_max", "threshold", "residual_at_n_max", "growth_at_half",
                        "growth_at_n_max"], fmt, fh)
        return EXIT_OK if all(r["threshold"] is not None for r in rows) else EXIT_FINDINGS
    graphs = load_graphs(args)
    rows = [r for r in parallel_map(_ChromaticWorker(cfg.tol), graphs, cfg.jobs) if r is not None]
    rows.sort(key=lambda r: r["graph6"])
    chain_failures = sum(1 for r in rows if not r["chain_ok"])
    findings = sum(1 for r in rows if r["conj1_anomaly"] or r["open_question_finding"])
    summary = {"graphs": len(rows), "chain_failures": chain_failures, "findings": findings}
    with _output(cfg.out) as (fmt, fh):
        emit(rows, CHROMATIC_COLUMNS, fmt, fh, summary)
    log.info("%d graphs, %d chain failures, %d findings", len(rows), chain_failures, findings)
    if chain_failures or (cfg.strict and findings):
        return EXIT_FINDINGS
    return EXIT_OK


def cmd_edge_effects(cfg: RunConfig, args) -> int:
    graphs = load_graphs(args)
    rows = [r for part in parallel_map(_edge_rows, graphs, cfg.jobs) for r in part]
    if args.edge:
        u, v = args.edge
        rows = [r for r in rows if {r["u"], r["v"]} == {u, v}]
        if not rows:
            raise GraphError(f"({u}, {v}) is not an edge")
    bad = sum(1 for r in rows if r["violation"])
    with _output(cfg.out) as (fmt, fh):
        emit(rows, EDGE_COLUMNS, fmt, fh, {"edges": len(rows), "violations": bad})
    return EXIT_FINDINGS if bad else EXIT_OK


FINDING_COLUMNS = ["kind", "di", "dj", "neighbors_i", "neighbors_j", "gaDelta", "agDelta",
                   "T11i", "T11ii", "verified", "witnessOrder", "witnessGraph6"]


def _ms_text(ms) -> str:
    return " ".join(f"{d}x{c}" for d, c in ms)


def cmd_search_t11(cfg: RunConfig, args) -> int:
    spec = SearchSpec(di_max=args.di_max, dj_max=args.dj_max, di_min=args.di_min,
                      dj_min=args.dj_min, exceptions=not args.uniform,
                      verify_limit=args.verify_limit)
    findings = search_t11(spec)
    kinds = ("refutes-T11i", "T11-not-necessary")
    counts = {k: sum(1 for f in findings if f.kind == k) for k in kinds}
    shown = [f for k in kinds for f in [f for f in findings if f.kind == k][:args.limit]]
    with _output(cfg.out, "json") as (fmt, fh):
        if fmt == "json":
            write_json({"summary": {"counts": counts, "spec": {
                "di_min": spec.di_min, "di_max": spec.di_max, "dj_min": spec.dj_min,
                "dj_max": spec.dj_max, "exceptions": spec.exceptions}},
                "findings": [f.to_json() for f in shown]}, fh)
        else:
            rows = [{"kind": f.kind, "di": f.context.di, "dj": f.context.dj,
                     "neighbors_i": _ms_text(f.context.nbr_i),
                     "neighbors_j": _ms_text(f.context.nbr_j), "gaDelta": f.ga_delta,
                     "agDelta": f.ag_delta, **f.verdicts, "verified": f.verified,
                     "witnessOrder": f.context.witness_order,
                     "witnessGraph6": f.witness_graph6 or ""} for f in shown]
            emit(rows, FINDING_COLUMNS, fmt, fh)
    log.info("findings: %s", counts)
    return EXIT_FINDINGS if cfg.strict and findings else EXIT_OK


def cmd_problem1(cfg: RunConfig, args) -> int:
    rep = problem1_scan(load_graphs(args), cfg.precision, args.top)
    with _output(cfg.out, "json") as (fmt, fh):
        if fmt == "json":
            write_json(rep.to_json(), fh)
        else:
            rows = [{"index": name, **r.to_json()} for name, recs in
                    (("GA", rep.smallest_ga), ("AG", rep.smallest_ag)) for r in recs]
            for r in rows:
                r["edge"] = "-".join(map(str, r["edge"]))
            emit(rows, ["index", "graph6", "edge", "absDelta", "candidate"], fmt, fh)
    return EXIT_FINDINGS if cfg.strict and rep.candidates else EXIT_OK


def cmd_enumerate(cfg: RunConfig, args) -> int:
    gen = enumerate_all(args.n) if args.all else enumerate_connected(args.n)
    lines = [write_graph6(g) + "\n" for g in gen]
    if cfg.out and cfg.out not in ("csv", "json"):
        Path(cfg.out).write_text("".join(lines))
    else:
        sys.stdout.writelines(lines)
    log.info("%d graphs on %d vertices", len(lines), args.n)
    return EXIT_OK


COMMANDS = {
    "indices": cmd_indices,
    "verify-bounds": cmd_verify_bounds,
    "verify-relations": cmd_verify_relations,
    "chromatic-check": cmd_chromatic,
    "edge-effects": cmd_edge_effects,
    "search-t11": cmd_search_t11,
    "problem1": cmd_problem1,
    "enumerate": cmd_enumerate,
}


def _add_common(p: argparse.ArgumentParser, graphs: bool = True) -> None:
    if graphs:
        p.add_argument("--in", dest="input", help="graph file")
        p.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
        p.add_argument("--family", help="named family: K, Kpq, star, P, C, L, petersen, tstar")
        p.add_argument("--n", type=int)
        p.add_argument("--k", help="integer, comma list, or range a..b")
        p.add_argument("--p", type=int)
        p.add_argument("--q", type=int)
        p.add_argument("--enumerate-n", type=int, help="all connected graphs on exactly N vertices")
        p.add_argument("--enumerate-upto", type=int, help="all connected graphs on 2..N vertices")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--precision", type=int, default=50)
    p.add_argument("--out", help="csv, json, or an output path (.json selects JSON)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--strict", action="store_true",
                   help="abort on malformed input lines and fail on findings")
    p.add_argument("-v", "--verbose", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="agindex", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("indices", "verify-bounds", "verify-relations"):
        _add_common(sub.add_parser(name))
    p = sub.add_parser("chromatic-check")
    _add_common(p)
    p.add_argument("--n-max", type=int, help="with --family L: closed-form threshold scan")
    p = sub.add_parser("edge-effects")
    _add_common(p)
    p.add_argument("--all-edges", action="store_true", help="report every edge (default)")
    p.add_argument("--edge", type=int, nargs=2, metavar=("U", "V"))
    p = sub.add_parser("search-t11")
    _add_common(p, graphs=False)
    p.add_argument("--di-min", type=int, default=1)
    p.add_argument("--di-max", type=int, default=50)
    p.add_argument("--dj-min", type=int, default=2)
    p.add_argument("--dj-max", type=int, default=2000)
    p.add_argument("--uniform", action="store_true", help="no exceptional neighbour degree")
    p.add_argument("--verify-limit", type=int, default=3)
    p.add_argument("--limit", type=int, default=100, help="findings emitted per kind")
    p = sub.add_parser("problem1")
    _add_common(p)
    p.add_argument("--top", type=int, default=5)
    p = sub.add_parser("enumerate")
    _add_common(p, graphs=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--all", action="store_true", help="include disconnected graphs")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s", stream=sys.stderr)
    try:
        cfg = RunConfig(args.command, _source(args), args.tol, args.precision, args.out,
                        args.jobs, args.strict)
        return COMMANDS[args.command](cfg, args)
    except BrokenPipeError:
        # downstream reader closed early, e.g. `| head`
        sys.stdout = open(os.devnull, "w")
        return EXIT_OK
    except (GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
