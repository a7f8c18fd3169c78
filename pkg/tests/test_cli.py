import csv
import io
import json

import pytest

from agindex.cli import main, parallel_map
from agindex.graph_io import parse_graph6
from agindex.report import ViolationRecord, reverify


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_indices_k4(capsys):
    code, out = run(capsys, "indices", "--family", "K", "--n", "4")
    assert code == 0
    row = next(csv.DictReader(io.StringIO(out)))
    assert {k: float(row[k]) for k in ("GA", "AG", "M1", "M2", "F", "SDD", "ABC")} == dict(
        GA=6, AG=6, M1=36, M2=54, F=108, SDD=12, ABC=4)


def test_verify_bounds_n6(capsys):
    code, out = run(capsys, "verify-bounds", "--enumerate-n", "6", "--out", "json")
    assert code == 0
    data = json.loads(out)
    assert data["summary"]["graphs"] == 112
    assert data["summary"]["violations"] == 0 and data["summary"]["anomalies"] == 0


def test_verify_bounds_n7_reports_near_misses(capsys):
    code, out = run(capsys, "verify-bounds", "--enumerate-n", "7", "--out", "json")
    data = json.loads(out)
    flagged = sorted(r["graph6"] for r in data["records"] if r["anomaly"])
    assert flagged == ["FZn]w", "F^~~w"]
    assert code == 1
    for r in data["records"]:
        if r["anomaly"]:
            rec = ViolationRecord(r["graph6"], r["check_id"], r["lhs"], r["rhs"], r["slack"])
            assert reverify(rec)


def test_parallel_output_is_byte_identical(capsys):
    _, serial = run(capsys, "verify-relations", "--enumerate-n", "6")
    _, parallel = run(capsys, "verify-relations", "--enumerate-n", "6", "--jobs", "3")
    assert serial == parallel


def test_parallel_map_preserves_order():
    assert parallel_map(abs, list(range(-20, 0)), 3) == list(range(20, 0, -1))


def test_chromatic_family_scan(capsys):
    code, out = run(capsys, "chromatic-check", "--family", "L", "--k", "2..5", "--n-max", "2000")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [int(r["threshold"]) for r in rows] == [4, 5, 6, 7]


def test_chromatic_findings_and_strict(capsys):
    assert run(capsys, "chromatic-check", "--enumerate-n", "4")[0] == 0
    assert run(capsys, "chromatic-check", "--enumerate-n", "4", "--strict")[0] == 1


def test_edge_effects(tmp_path, capsys):
    p = tmp_path / "g.g6"
    p.write_text("Bg\nC~\n")
    code, out = run(capsys, "edge-effects", "--in", str(p), "--all-edges")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 2 + 6
    assert all(r["violation"] == "" for r in rows)


def test_search_t11(tmp_path, capsys):
    out = tmp_path / "t11.json"
    code, _ = run(capsys, "search-t11", "--di-max", "50", "--dj-max", "2000", "--out", str(out))
    assert code == 0
    data = json.loads(out.read_text())
    assert data["summary"]["counts"]["refutes-T11i"] >= 1
    f = next(f for f in data["findings"] if f["kind"] == "refutes-T11i")
    assert f["verified"] and f["gaDelta"] < 0 and f["verdicts"]["T11i"]
    assert set(f) >= {"context", "gaDelta", "agDelta", "verdicts", "witnessGraph6"}
    assert parse_graph6(f["witnessGraph6"]).n == f["witnessOrder"]


def test_unchanged_index_scan(capsys):
    code, out = run(capsys, "problem1", "--enumerate-n", "5", "--precision", "40")
    assert code == 0
    data = json.loads(out)
    assert data["candidates"] == [] and data["smallestGA"]


def test_enumerate(tmp_path, capsys):
    out = tmp_path / "g7.g6"
    assert run(capsys, "enumerate", "--n", "7", "--out", str(out))[0] == 0
    assert len(out.read_text().split()) == 853


def test_errors_exit_2(capsys, tmp_path):
    assert run(capsys, "indices", "--in", str(tmp_path / "missing.g6"))[0] == 2
    assert run(capsys, "indices", "--family", "K", "--n", "4", "--tol", "0")[0] == 2
    assert run(capsys, "problem1", "--family", "K", "--n", "4", "--precision", "10")[0] == 2
    assert run(capsys, "indices")[0] == 2
    bad = tmp_path / "bad.g6"
    bad.write_text("A_\n!!\n")
    assert run(capsys, "indices", "--in", str(bad), "--strict")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
