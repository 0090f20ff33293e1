import csv
import io
import json
import math
import subprocess
import sys

import numpy as np
import pytest

from zernbases import cli, serialize
from zernbases.bases import IndexI, IndexII, psi
from zernbases.interbasis import w_matrix


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_tables_n0(capsys, validate):
    code, out, _ = run(capsys, "tables", "--n-max", "0", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    validate(doc, "tables")
    e = doc["rungs"][0]["entries"][0][0]
    assert (e["phase_k"], e["sign"], e["num"], e["den"]) == (0, 1, 1, 1)


def test_tables_n2_zero(capsys):
    _, out, _ = run(capsys, "tables", "--n-max", "2")
    rung = json.loads(out)["rungs"][2]
    assert rung["cols"] == [2, 0, -2]
    mid = rung["entries"][1][1]
    assert mid["sign"] == 0 and mid["num"] == 0


def test_tables_roundtrip_json_and_csv(capsys, validate):
    _, js, _ = run(capsys, "tables", "--n-max", "6", "--format", "json")
    _, cs, _ = run(capsys, "tables", "--n-max", "6", "--format", "csv")
    validate(json.loads(js), "tables")
    from_json = serialize.matrices_from_tables_dict(json.loads(js))
    from_csv = serialize.matrices_from_tables_csv(cs)
    for n in range(7):
        assert from_json[n] == w_matrix(n)
        assert from_csv[n] == w_matrix(n)
    assert cs.splitlines()[0] == ",".join(serialize.TABLE_CSV_HEADER)


def test_eval_csv_and_json_agree(capsys, validate):
    _, cs, _ = run(capsys, "eval", "--basis", "I", "--index", "2,2", "--grid", "7x5")
    _, js, _ = run(capsys, "eval", "--basis", "I", "--index", "2,2", "--grid", "7x5", "--format", "json")
    doc = json.loads(js)
    validate(doc, "grid")
    rows = list(csv.DictReader(io.StringIO(cs)))
    assert len(rows) == 35 == len(doc["values"])
    for r, x, y, v, ok in zip(rows, doc["x"], doc["y"], doc["values"], doc["mask"]):
        assert float(r["x"]) == x and float(r["y"]) == y
        assert (r["in_disk"] == "1") == ok
        if ok:
            assert [float(r["re"]), float(r["im"])] == v
            assert complex(*v) == pytest.approx(psi(IndexI(2, 2), x, y), abs=1e-14)
        else:
            assert v is None and r["re"] == ""


def test_eval_examples(capsys):
    _, cs, _ = run(capsys, "eval", "--basis", "I", "--index", "0,0", "--grid", "3x3")
    vals = [float(r["re"]) for r in csv.DictReader(io.StringIO(cs)) if r["in_disk"] == "1"]
    assert vals == pytest.approx([1 / math.sqrt(math.pi)] * 5)
    _, js, _ = run(capsys, "eval", "--basis", "II", "--index", "0,2", "--grid", "5", "--format", "json")
    doc = json.loads(js)
    by_x = {}
    for x, v in zip(doc["x"], doc["values"]):
        if v is not None:
            by_x.setdefault(x, []).append(v[0])
    for col in by_x.values():
        assert col == pytest.approx([col[0]] * len(col), abs=1e-13)
    _, js, _ = run(capsys, "eval", "--basis", "I", "--index", "1,1", "--grid", "5x5", "--format", "json")
    doc = json.loads(js)
    assert doc["values"][12] == [0.0, 0.0]


def test_eval_invalid_index(capsys):
    code, _, err = run(capsys, "eval", "--basis", "I", "--index", "2,1")
    assert code == 2 and "invalid" in err
    with pytest.raises(SystemExit):
        cli.main(["eval", "--basis", "I", "--index", "2"])


def test_convert_roundtrip(tmp_path, capsys, validate):
    rng = np.random.default_rng(0)
    coeffs = [
        {"index": [n, m], "re": float(rng.normal()), "im": float(rng.normal())}
        for n in range(5)
        for m in range(-n, n + 1, 2)
    ]
    src = {"kind": "spectrum", "basis": "I", "max_rung": 4, "coeffs": coeffs}
    validate(src, "spectrum")
    p1 = tmp_path / "a.json"
    p1.write_text(json.dumps(src))
    p2 = tmp_path / "b.json"
    assert cli.main(["convert", "--input", str(p1), "--target", "II", "-o", str(p2)]) == 0
    mid = json.loads(p2.read_text())
    validate(mid, "spectrum")
    assert mid["basis"] == "II"
    code, out, _ = run(capsys, "convert", "--input", str(p2), "--target", "I")
    back = json.loads(out)
    got = {tuple(c["index"]): complex(c["re"], c["im"]) for c in back["coeffs"]}
    for c in coeffs:
        assert abs(got[tuple(c["index"])] - complex(c["re"], c["im"])) <= 1e-12


def test_convert_rejects_inconsistent(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"basis": "I", "max_rung": 1, "coeffs": [{"index": [2, 0], "re": 1}]}))
    code, _, err = run(capsys, "convert", "--input", str(p), "--target", "II")
    assert code == 2 and "max_rung" in err


def test_fit_from_csv(tmp_path, capsys, validate):
    rng = np.random.default_rng(1)
    r = np.sqrt(rng.uniform(0, 1, 120))
    t = rng.uniform(-math.pi, math.pi, 120)
    x, y = r * np.cos(t), r * np.sin(t)
    v = psi(IndexII(1, 2), x, y)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["x", "y", "re", "im"])
    for row in zip(x, y, v):
        w.writerow([repr(float(row[0])), repr(float(row[1])), repr(float(row[2])), 0.0])
    p = tmp_path / "s.csv"
    p.write_text(buf.getvalue())
    code, out, _ = run(capsys, "fit", "--input", str(p), "--basis", "II", "--n-max", "3")
    assert code == 0
    doc = json.loads(out)
    validate(doc, "spectrum")
    assert doc["fit"]["rms_residual"] <= 1e-10 and doc["fit"]["n_samples"] == 120
    for c in doc["coeffs"]:
        want = 1.0 if c["index"] == [1, 2] else 0.0
        assert abs(c["re"] - want) <= 1e-10 and abs(c["im"]) <= 1e-10


def test_fit_json_samples_and_rank_error(tmp_path, capsys):
    p = tmp_path / "s.json"
    p.write_text(json.dumps({"samples": [[0.1, 0.0, 1.0], [0.2, 0.1, 1.0]]}))
    code, _, err = run(capsys, "fit", "--input", str(p), "--basis", "I", "--n-max", "1")
    assert code == 2 and "rank" in err


def test_verify_pass_and_fail(capsys, validate):
    code, out, _ = run(capsys, "verify", "--suite", "unitarity", "--suite", "eigenvalue", "--n-max", "6")
    assert code == 0
    doc = json.loads(out)
    validate(doc, "verify")
    assert doc["passed"] and [s["suite"] for s in doc["suites"]] == ["unitarity", "eigenvalue"]
    code, out, _ = run(capsys, "verify", "--suite", "orthonormality", "--n-max", "6", "--order", "4")
    assert code == 1 and not json.loads(out)["passed"]


def test_verify_all_deterministic(capsys, validate):
    _, a, _ = run(capsys, "verify", "--suite", "all", "--n-max", "4")
    _, b, _ = run(capsys, "verify", "--suite", "all", "--n-max", "4", "--threads", "3")
    validate(json.loads(a), "verify")
    assert a == b
    assert json.loads(a)["passed"]


def test_negative_n_max(capsys):
    code, _, err = run(capsys, "tables", "--n-max", "-1")
    assert code == 2


def test_bad_format_rejected():
    with pytest.raises(SystemExit):
        cli.main(["tables", "--n-max", "1", "--format", "xml"])


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "zernbases", "tables", "--n-max", "1", "--format", "csv"],
        capture_output=True, text=True, check=True,
    )
    lines = out.stdout.splitlines()
    assert lines[0].startswith("n,n1,n2,m") and len(lines) == 1 + 1 + 4
