import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from coxlab.cli import main

FIXTURES = Path(__file__).parent / "fixtures"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_chain_output_matches_golden_file():
    code, out, _ = run("chain", "--algebra", "linear", "--n", "12", "--relations", "x3")
    assert code == 0
    assert out == (FIXTURES / "chain_x3.txt").read_text()


def test_chain_output_is_stable_across_runs():
    outs = {run("chain", "--algebra", "ladder", "--variant", "C", "--n", "7")[1] for _ in range(3)}
    assert len(outs) == 1


def test_coxpoly_v_notation():
    assert run("coxpoly", "--algebra", "canonical", "--weights", "2,3,7") == (0, "(x-1)^2 * v2 * v3 * v7\n", "")


def test_radius_one_csv():
    assert run("radius-one", "--degree", "12", "--format", "csv")[1] == "12,1420,1001,598\n"
    code, out, _ = run("radius-one", "--degree", "1,2", "--format", "csv", "--header")
    assert out.splitlines() == ["n,a,b,c", "1,2,1,1", "2,6,5,3"]


def test_classify_d12_poly():
    code, out, _ = run("classify", "--poly", "[1,1,0,0,0,0,0,0,0,0,0,1,1]")
    assert code == 0 and "D12" in out and "<2,4,6>" in out
    code, out, _ = run("classify", "--poly", "[1,0,-1,0,0,0,0,0,0,0,-1,0,1]")
    assert "~A(2,10)" in out


def test_json_output_is_parseable():
    code, out, _ = run("spectral", "--algebra", "star", "--weights", "2,3,7", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["salem"] is True and abs(data["spectral_radius"] - 1.17628081826) < 1e-9


def test_cartan_bases():
    code, out, _ = run("cartan", "--algebra", "star", "--weights", "2,2", "--format", "json")
    proj = json.loads(out)["matrix"]
    code, out, _ = run("cartan", "--algebra", "star", "--weights", "2,2", "--basis", "simples", "--format", "json")
    simp = json.loads(out)["matrix"]
    assert proj == [[1, 1, 1], [0, 1, 0], [0, 0, 1]]
    assert simp == [[1, -1, -1], [0, 1, 0], [0, 0, 1]]


def test_file_input(tmp_path):
    path = tmp_path / "alg.json"
    path.write_text(json.dumps({"kind": "poset", "vertices": 4, "covers": [[1, 2], [1, 3], [2, 4], [3, 4]]}))
    code, out, _ = run("factor", "--file", str(path))
    assert code == 0 and out.strip()


@pytest.mark.parametrize("argv, fragment", [
    (["coxpoly", "--algebra", "blah"], "InvalidAlgebraError: unknown algebra kind 'blah'"),
    (["coxpoly"], "ArgumentError"),
    (["coxpoly", "--file", "/nonexistent/x.json"], "ArgumentError: cannot read"),
    (["factor", "--poly", "[1,2"], "ArgumentError"),
    (["represent", "--poly", "[1,2,3]"], "NotRepresentableError"),
    (["chain", "--algebra", "linear", "--relations", "x3"], "ArgumentError: --relations needs --n"),
    (["hilbert-check", "--weights", "2,3,6"], "ArgumentError"),
    (["isospectral"], "ArgumentError"),
])
def test_errors_exit_one(argv, fragment):
    code, out, err = run(*argv)
    assert code == 1 and out == ""
    assert fragment in err


def test_usage_errors_exit_two(capsys):
    assert run("nosuchcommand")[0] == 2
    assert run("radius-one")[0] == 2
    assert run("radius-one", "--degree", "a,b")[0] == 2


def test_census_reports_convention():
    code, out, _ = run("census", "--n", "6")
    assert code == 0 and "convention: relation sets counted up to reversal" in out


def test_tables_and_hilbert_text():
    code, out, _ = run("tables", "--which", "dynkin")
    assert code == 0 and "E_8" in out
    code, out, _ = run("hilbert-check", "--weights", "2,3,7", "--terms", "20")
    assert "yes" in out


def test_bad_jobs_environment(monkeypatch):
    monkeypatch.setenv("COXLAB_JOBS", "many")
    code, _, err = run("census", "--n", "5")
    assert code == 1 and "COXLAB_JOBS" in err


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "coxlab", "coxpoly", "--algebra", "star", "--weights", "2,3,5"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "v2 * v3 * v5 * v30 / (v6 * v10 * v15)\n"
    proc = subprocess.run([sys.executable, "-m", "coxlab", "coxpoly", "--algebra", "blah"],
                          capture_output=True, text=True)
    assert proc.returncode == 1 and proc.stderr.startswith("InvalidAlgebraError:")
