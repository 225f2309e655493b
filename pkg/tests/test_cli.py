import io
import json
import subprocess
import sys

import pytest

from specfock.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_decomp_json():
    code, out, _ = run("decomp", "--n", "2", "--l", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert [c["label"] for c in doc["columns"]] == ["2"]
    assert {"partition": "1,1", "poly": "q"} in doc["columns"][0]["entries"]


def test_decomp_empty():
    code, out, _ = run("decomp", "--n", "0", "--l", "3")
    assert code == 0
    assert [c["label"] for c in json.loads(out)["columns"]] == [""]


def test_decomp_latex():
    code, out, _ = run("decomp", "--n", "3", "--l", "3", "--format", "latex")
    assert code == 0
    assert out.startswith(r"\begin{tabular}{l|cc}")
    assert "$(2,1)$ & $q$ & $1$" in out


def test_decomp_left_convention():
    code, out, _ = run("decomp", "--n", "2", "--l", "2", "--convention", "left")
    assert code == 0 and '"poly": "q^-1"' in out


def test_tilt_outputs():
    code, out, _ = run("tilt", "--p", "3", "--m", "37", "--mode", "modified")
    assert code == 0
    entries = {e["weight"]: e["poly"] for e in json.loads(out)["entries"]}
    assert entries == {37: "1", 33: "q^2", 19: "q", 15: "q^3"}
    code, out, _ = run("tilt", "--p", "3", "--m", "1", "--mode", "modified", "--format", "csv")
    assert code == 0 and out == "weight,poly\n1,1\n"


def test_tilt_picture():
    code, out, _ = run("tilt", "--p", "3", "--m", "37", "--mode", "modified", "--format", "picture-text")
    assert code == 0
    assert "p^3" in out and "p^2" in out
    assert out.count(" o") == 4
    code, svg, _ = run("picture", "--p", "3", "--m", "37", "--format", "svg")
    assert code == 0 and svg.count("<circle") == 4


def test_fock_apply():
    code, out, _ = run("fock", "apply", "--l", "2", "--ops", "e1", "--start", "2,1")
    assert code == 0 and out == "(2) + (q)(1,1)\n"
    code, out, _ = run("fock", "apply", "--l", "5", "--ops", "f3", "--start", "15,9", "--format", "json")
    assert json.loads(out) == [{"partition": "15,10", "coeff": "1"}, {"partition": "15,9,1", "coeff": "q"}]
    code, out, _ = run("fock", "apply", "--l", "2", "--ops", "f1 f0", "--start", "")
    assert out == "(2) + (q)(1,1)\n"


@pytest.mark.parametrize(
    "argv",
    [
        ("tilt", "--p", "2", "--m", "5", "--mode", "modified"),
        ("tilt", "--p", "3", "--m", "-4"),
        ("decomp", "--n", "3", "--l", "1"),
        ("decomp", "--n", "x", "--l", "2"),
        ("fock", "apply", "--l", "2", "--ops", "e1", "--start", "1,2"),
        ("fock", "apply", "--l", "2", "--ops", "e1", "--start", "a,b"),
        ("fock", "apply", "--l", "2", "--ops", "f7", "--start", "1"),
        ("fock", "apply", "--l", "2", "--ops", "h1", "--start", "1"),
        ("verify", "thm1", "--max-n", "99"),
        ("verify", "hecke", "--max-rank", "9"),
        ("verify", "erdmann", "--p", "2", "--max-m", "5"),
        ("verify", "nonsense"),
        (),
    ],
)
def test_invalid_arguments_exit_2(argv, capsys):
    code, _, err = run(*argv)
    assert code == 2
    assert err or capsys.readouterr().err


def test_verify_pass_and_report():
    code, out, err = run("verify", "thm1", "--max-n", "10", "--max-l", "8")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "check,instance,row,l,q,lhs,rhs,k,result"
    assert len(lines) - 1 == int(err.split()[2]) and "0 failed" in err
    assert all(ln.endswith(",pass") for ln in lines[1:])


def test_verify_erdmann():
    code, out, _ = run("verify", "erdmann", "--p", "3", "--max-m", "120", "--mode", "modified")
    assert code == 0 and out.count("\n") == 122


def test_verify_failure_names_instance(tmp_path):
    target = tmp_path / "eq5.csv"
    code, _, err = run("verify", "eq5", "--max-n", "4", "--l", "2", "--output", str(target))
    assert code == 1
    assert "FAIL eq5 2 " in err
    assert ",FAIL" in target.read_text()


def test_verify_deterministic():
    a = run("verify", "duality", "--max-n", "8", "--max-l", "4")
    b = run("verify", "duality", "--max-n", "8", "--max-l", "4")
    assert a == b


def test_verify_hecke_small_with_jobs(monkeypatch):
    monkeypatch.setenv("SPECFOCK_JOBS", "2")
    a = run("verify", "hecke", "--max-rank", "3", "--seed", "5")
    monkeypatch.setenv("SPECFOCK_JOBS", "1")
    b = run("verify", "hecke", "--max-rank", "3", "--seed", "5")
    assert a[0] == 0 and a == b


def test_bad_jobs_env(monkeypatch):
    monkeypatch.setenv("SPECFOCK_JOBS", "many")
    assert run("verify", "hecke", "--max-rank", "2")[0] == 2


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "specfock.cli", "tilt", "--p", "3", "--m", "7", "--format", "csv"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == "weight,poly\n7,1\n3,q\n"
