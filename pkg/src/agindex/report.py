"""Report records and deterministic CSV/JSON emission."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Iterable, Optional, Sequence, TextIO

from .checks import ASSERTION, CheckReport

SIG_DIGITS = 12


def fmt_number(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    if isinstance(x, float):
        if math.isnan(x):
            return ""
        return format(x, f".{SIG_DIGITS}g")
    if x is None:
        return ""
    return str(x)


@dataclass(frozen=True)
class ViolationRecord:
    witness: str  # graph6
    check_id: str
    lhs: float
    rhs: float
    slack: float
    edge: Optional[tuple[int, int]] = None
    note: str = ""
    severity: str = ASSERTION

    def sort_key(self):
        # total order, so equal-keyed records never depend on input order
        return (self.witness, self.check_id, self.edge or (-1, -1), self.note, self.severity,
                self.slack, self.lhs, self.rhs)

    def to_json(self) -> dict:
        d = asdict(self)
        d["edge"] = list(self.edge) if self.edge else None
        return d

    @classmethod
    def from_json(cls, obj: dict) -> "ViolationRecord":
        obj = dict(obj)
        obj["edge"] = tuple(obj["edge"]) if obj.get("edge") else None
        return cls(**obj)

    @classmethod
    def from_check(cls, witness: str, r: CheckReport) -> "ViolationRecord":
        return cls(witness, r.check_id, r.lhs, r.rhs, r.slack, None, r.anomaly or "", r.severity)


RECORD_COLUMNS = [f.name for f in fields(ViolationRecord)]


def records_to_rows(records: Iterable[ViolationRecord]) -> list[dict]:
    rows = []
    for r in sorted(records, key=ViolationRecord.sort_key):
        d = asdict(r)
        d["edge"] = f"{r.edge[0]}-{r.edge[1]}" if r.edge else ""
        rows.append(d)
    return rows


def rows_from_csv(text: str) -> list[ViolationRecord]:
    out = []
    for row in csv.DictReader(io.StringIO(text)):
        edge = tuple(int(x) for x in row["edge"].split("-")) if row["edge"] else None
        out.append(ViolationRecord(row["witness"], row["check_id"], float(row["lhs"]),
                                   float(row["rhs"]), float(row["slack"]), edge,
                                   row["note"], row["severity"]))
    return out


def write_csv(rows: Sequence[dict], columns: Sequence[str], stream: TextIO) -> None:
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([fmt_number(row.get(c)) for c in columns])


def write_json(obj, stream: TextIO) -> None:
    json.dump(obj, stream, indent=2, sort_keys=True, default=_json_default)
    stream.write("\n")


def _json_default(x):
    if isinstance(x, tuple):
        return list(x)
    try:
        import mpmath

        if isinstance(x, mpmath.mpf):
            return mpmath.nstr(x, 20)
    except ImportError:  # pragma: no cover
        pass
    raise TypeError(f"not serializable: {type(x).__name__}")


def emit(rows: Sequence[dict], columns: Sequence[str], fmt: str, stream: TextIO,
         meta: Optional[dict] = None) -> None:
    """Rows are emitted in the order given; callers sort them."""
    if fmt == "csv":
        write_csv(rows, columns, stream)
    elif fmt == "json":
        payload = {"records": [{c: row.get(c) for c in columns} for row in rows]}
        if meta:
            payload["summary"] = meta
        write_json(payload, stream)
    else:
        raise ValueError(f"unknown output format {fmt!r}")


def emit_records(records: Iterable[ViolationRecord], fmt: str, stream: TextIO) -> None:
    records = sorted(records, key=ViolationRecord.sort_key)
    if fmt == "json":
        write_json([r.to_json() for r in records], stream)
    else:
        write_csv(records_to_rows(records), RECORD_COLUMNS, stream)


def load_records(path: str | Path) -> list[ViolationRecord]:
    text = Path(path).read_text()
    if text.lstrip().startswith("["):
        return [ViolationRecord.from_json(o) for o in json.loads(text)]
    return rows_from_csv(text)


def reverify(record: ViolationRecord, tol: float = 1e-12) -> bool:
    """Reload the witness, rerun the cited check, and compare slacks."""
    from .bounds import BOUNDS
    from .chromatic import conjecture1_check
    from .graph_io import parse_graph6
    from .relations import verify_relations

    g = parse_graph6(record.witness)
    if record.check_id in BOUNDS:
        r = BOUNDS[record.check_id](g)
    elif record.check_id == "Conj1":
        r = conjecture1_check(g)
    else:
        matches = [r for r in verify_relations(g) if r.check_id == record.check_id]
        if not matches:
            raise KeyError(record.check_id)
        r = matches[0]
    return r.applicable and abs(r.slack - record.slack) <= tol * max(1.0, abs(record.slack))
