import csv
import functools
import io
import json

import pytest

from mzeta import verify_theorem1
from mzeta.cli import main, parse_points, parse_range
from mzeta.identities import SUITES
from mzeta.report import FIELDS


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_integral_and_series_agree(capsys):
    code, out, _ = run(capsys, "eval", "zeta2", "--args", "2,2", "--method", "integral")
    assert code == 0 and "±" in out and "integral" in out
    integral = float(out.split()[0])
    code, out, _ = run(capsys, "eval", "zeta2", "--args", "2,2", "--method", "series")
    assert code == 0
    assert integral == pytest.approx(float(out.split()[0]), rel=1e-8)
    assert integral == pytest.approx(0.8117424253, abs=1e-10)


def test_eval_hurwitz_json(capsys):
    code, out, _ = run(capsys, "eval", "hurwitz", "--args", "2,1", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["value"] == pytest.approx(1.6449340668, abs=1e-10)
    assert d["error"] > 0 and d["method"] == "series"


def test_eval_methods(capsys):
    for method in ("series", "integral"):
        code, out, _ = run(capsys, "eval", "zeta3", "--args", "2,2,2", "--method", method, "--format", "json")
        assert code == 0 and json.loads(out)["value"] == pytest.approx(0.1907518241, abs=1e-9)
    code, out, _ = run(capsys, "eval", "zeta2", "--args", "2,2", "--method", "approx", "--format", "json")
    assert code == 0 and json.loads(out)["value"] > 0.8117424253


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["eval", "zeta2", "--args", "0.5,2"], 2),
        (["eval", "zeta3", "--args", "1,2,2", "--method", "integral"], 2),
        (["eval", "zeta2", "--args", "2,x"], 64),
        (["eval", "zeta", "--args", "2,3"], 64),
        (["eval", "hurwitz", "--args", "2,1", "--method", "integral"], 64),
        (["eval", "nope", "--args", "2"], 64),
        (["--tol", "5", "eval", "zeta", "--args", "2"], 64),
        (["verify", "theorem1", "--grid", "2"], 64),
        (["verify", "theorem1", "--grid", "2,2", "--s1", "2"], 64),
        (["table", "zeta2"], 64),
        (["bogus"], 64),
    ],
)
def test_exit_codes(capsys, argv, expected):
    code, _, _ = run(capsys, *argv)
    assert code == expected


def test_accuracy_failure_exit_code(capsys):
    code, _, err = run(capsys, "--max-segments", "8", "eval", "zeta2", "--args", "2,2", "--method", "integral")
    assert code == 3 and "accuracy" in err


def test_io_error_exit_code(capsys, tmp_path):
    target = tmp_path / "missing" / "out.csv"
    code, _, _ = run(capsys, "table", "zeta2", "--grid", "2,2", "-o", str(target))
    assert code == 74


def test_verify_theorem1_default_grid(capsys):
    code, out, _ = run(capsys, "verify", "theorem1", "--grid", "default")
    reports = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(reports) == 16
    assert all(r["passed"] for r in reports)
    assert all(tuple(r) == FIELDS for r in reports)


def test_verify_failure_exit_code(capsys, monkeypatch):
    strict = functools.partial(verify_theorem1, tolerance=0.0)
    monkeypatch.setitem(SUITES, "theorem1", [(strict, ((1.0, 1.5), (2.0, 2.0)))])
    code, out, _ = run(capsys, "verify", "theorem1")
    reports = [json.loads(line) for line in out.splitlines()]
    assert code == 1 and len(reports) == 2
    assert not all(r["passed"] for r in reports)


def test_verify_grid_needs_single_check_suite(capsys):
    code, _, _ = run(capsys, "verify", "closed-forms", "--grid", "2")
    assert code == 64


def test_verify_csv_round_trip(capsys):
    code, out, _ = run(capsys, "verify", "closed-forms", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and tuple(rows[0]) == FIELDS
    names = {r["identity"] for r in rows}
    assert {"closed_form_pair", "closed_form_triple"} <= names
    for r in rows:
        assert r["passed"] == "true"
        json.loads(r["detail"])
        assert float(r["rel_err"]) <= float(r["tol"])


def test_verify_ranges(capsys):
    code, out, _ = run(capsys, "verify", "reflection", "--s1", "2:3:1", "--s2", "2")
    reports = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and [r["args"] for r in reports] == [[2.0, 2.0], [3.0, 2.0]]


def test_table_is_deterministic(capsys, tmp_path):
    argv = ["table", "zeta2", "--s1", "1:3:0.5", "--s2", "1.5:6:0.5", "--format", "csv"]
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(argv + ["-o", str(first)]) == 0
    assert main(["--threads", "4"] + argv + ["-o", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()
    rows = list(csv.DictReader(io.StringIO(first.read_text())))
    assert len(rows) == 5 * 10
    assert rows[0]["args"] == "1;1.5" and rows[-1]["args"] == "3;6"
    assert all(r["status"] == "ok" and float(r["error"]) >= 0 for r in rows)


def test_table_json(capsys):
    code, out, _ = run(capsys, "table", "zeta3", "--grid", "2,2,2;2,3,2", "--format", "json")
    rows = json.loads(out)
    assert code == 0 and len(rows) == 2
    assert rows[1]["args"] == [2.0, 3.0, 2.0]
    assert rows[0]["value"] == pytest.approx(0.1907518241, abs=1e-9)


def test_table_marks_bad_cells(capsys):
    code, out, _ = run(capsys, "table", "zeta2", "--grid", "2,2;0.5,2")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and [r["status"] for r in rows] == ["ok", "domain_error"]
    assert rows[1]["value"] == ""


def test_env_override(capsys, monkeypatch):
    monkeypatch.setenv("MZETA_TOL", "nonsense")
    code, _, _ = run(capsys, "eval", "zeta", "--args", "2")
    assert code == 64
    monkeypatch.setenv("MZETA_TOL", "1e-10")
    code, out, _ = run(capsys, "eval", "zeta", "--args", "2")
    assert code == 0


def test_range_parsing():
    assert parse_range("1.5:6:0.5")[-1] == 6.0
    assert parse_range("0:0.3:0.1") == [0.0, 0.1, 0.2, 0.3]
    assert parse_points("2,2,2;2,3,2") == [(2.0, 2.0, 2.0), (2.0, 3.0, 2.0)]
