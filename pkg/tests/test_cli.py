import csv
import io
import json

import pytest

from pgl2stab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_lambda(capsys):
    code, out, _ = run(capsys, "classify", "--field", "F3", "--lambda", "2")
    assert code == 0 and "S4" in out and "Case-i-S4" in out


def test_classify_set_json(capsys):
    code, out, _ = run(capsys, "classify", "--field", "Q", "--set", "0,2,3,6", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["group_type"] == "D4" and data["lambda"] == "2" and data["order"] == 8
    assert set(data) >= {"field", "lambda", "group_type", "order", "theorem_case",
                         "orbit_values", "distinct_count"}


def test_classify_lambda_zero_is_an_error(capsys):
    code, out, err = run(capsys, "classify", "--field", "Q", "--lambda", "0")
    assert code == 1 and "lambda must avoid 0 and 1" in err and out == ""


@pytest.mark.parametrize("argv", [
    ["classify", "--field", "F4", "--lambda", "2"],
    ["classify", "--field", "Q", "--set", "0,0,1,2"],
    ["classify", "--field", "Q", "--set", "0,1,2"],
    ["classify", "--field", "Q"],
    ["classify", "--field", "Q", "--lambda", "x"],
    ["stabilizer", "--field", "Q", "--set", "0,1,2,3,4"],
    ["orbit", "--field", "Q", "--lambda", "1"],
    ["scan", "--max-p", "2"],
])
def test_usage_errors_exit_one(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1 and err.startswith("error:")


def test_argparse_errors_exit_one():
    with pytest.raises(SystemExit) as info:
        main(["bogus"])
    assert info.value.code == 1


def test_stabilizer_three(capsys):
    code, out, _ = run(capsys, "stabilizer", "--field", "Q", "--set", "inf,0,1", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["order"] == 6 and data["group_type"] == "S3"
    assert sorted(map(tuple, data["elements"])) == sorted([
        ("1", "0", "0", "1"), ("0", "1", "1", "0"), ("1", "-1", "0", "-1"),
        ("0", "1", "-1", "1"), ("1", "-1", "1", "0"), ("1", "0", "1", "-1")])


def test_stabilizer_counts(capsys):
    code, out, _ = run(capsys, "stabilizer", "--field", "F5", "--set", "inf", "--format", "json")
    assert json.loads(out)["order"] == 20
    code, out, _ = run(capsys, "stabilizer", "--field", "Q", "--set", "inf,0,1,-1")
    assert code == 0 and "D4" in out and "order:      8" in out
    code, out, _ = run(capsys, "stabilizer", "--field", "Q", "--set", "0")
    assert code == 0 and "Infinite" in out and "family:" in out


def test_stabilizer_csv(capsys):
    code, out, _ = run(capsys, "stabilizer", "--field", "F3", "--set", "inf,0,1,2", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 24 and set(rows[0]) == {"formula", "a", "b", "c", "d", "perm"}


def test_orbit(capsys):
    code, out, _ = run(capsys, "orbit", "--field", "Q", "--lambda", "2", "--format", "json")
    data = json.loads(out)
    assert set(data["orbit_values"]) == {"-1", "1/2", "2"} and data["stabilizer_order"] == 8
    code, out, _ = run(capsys, "orbit", "--field", "F3", "--lambda", "2", "--format", "json")
    data = json.loads(out)
    assert data["distinct_count"] == 1 and data["stabilizer_order"] == 24
    code, out, _ = run(capsys, "orbit", "--field", "Q", "--lambda", "5", "--format", "json")
    data = json.loads(out)
    assert data["orbit_values"] == ["5", "1/5", "-4", "5/4", "-1/4", "4/5"]
    assert data["stabilizer_order"] == 4


def test_scan_small(capsys):
    code, out, _ = run(capsys, "scan", "--max-p", "13", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["total_mismatches"] == 0
    rows = {r["field_spec"]: r for r in data["fields"]}
    assert set(rows) == {"F3", "F2^2", "F5", "F7", "F11", "F13"}
    assert rows["F3"]["counts"] == {"S4": 1}
    assert rows["F7"]["counts"] == {"A4": 2, "D4": 3}
    assert rows["F13"]["counts"] == {"A4": 2, "D4": 3, "V4": 6}
    for r in rows.values():
        assert sum(r["counts"].values()) == r["q"] - 2
        assert r["mismatches"] == []


def test_scan_csv_to_file(tmp_path, capsys):
    path = tmp_path / "scan.csv"
    code, out, _ = run(capsys, "scan", "--max-p", "7", "--format", "csv", "--output", str(path))
    assert code == 0 and out == ""
    rows = list(csv.reader(path.open()))
    assert rows[0] == ["field", "q", "lambda", "group_type", "order", "theorem_case"]
    assert ["F3", "3", "2", "S4", "24", "Case-i-S4"] in rows
    assert len(rows) == 1 + 1 + 2 + 3 + 5


def test_scan_unwritable_output(tmp_path, capsys):
    code, _, err = run(capsys, "scan", "--max-p", "3", "--output", str(tmp_path / "no" / "x.json"))
    assert code == 1 and "cannot write" in err


def test_scan_workers_match_serial(capsys):
    _, serial, _ = run(capsys, "scan", "--max-p", "11", "--format", "json")
    _, parallel, _ = run(capsys, "scan", "--max-p", "11", "--format", "json", "--workers", "2")
    assert serial == parallel


def test_scan_exit_code_on_mismatch(monkeypatch, capsys):
    from pgl2stab import scan
    from pgl2stab.stabgroup import GroupType

    real = scan.classify_lambda

    def wrong(K, lam):
        c = real(K, lam)
        return c.__class__(c.field, c.lam, GroupType.V4, c.theorem_case, c.orbit)

    monkeypatch.setattr(scan, "classify_lambda", wrong)
    code, out, _ = run(capsys, "scan", "--max-p", "3", "--format", "json")
    data = json.loads(out)
    assert code == 2 and data["total_mismatches"] > 0


def test_classify_and_stabilizer_agree(capsys):
    for field, pts in (("Q", "0,2,3,6"), ("F7", "inf,0,1,3"), ("F2^2", "0,1,j,1+j"), ("F13", "2,5,7,11")):
        _, out1, _ = run(capsys, "classify", "--field", field, "--set", pts, "--format", "json")
        _, out2, _ = run(capsys, "stabilizer", "--field", field, "--set", pts, "--format", "json")
        assert json.loads(out1)["group_type"] == json.loads(out2)["group_type"]
