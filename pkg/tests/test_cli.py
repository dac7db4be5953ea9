from __future__ import annotations

import json
import subprocess
import sys

import pytest

from gramholes import goldens
from gramholes.cli import main
from gramholes.polyring import parse, varset
from gramholes.verify import _det, expand_factored

VS = varset(2)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_det_g1_text(capsys):
    code, out, _ = run(capsys, "det", "--n", "1", "--k", "2")
    assert code == 0
    assert parse(VS, out) == expand_factored(VS, goldens.DET_G1_FACTORS)
    assert out.strip() == _det(1).to_string()


def test_verify_delta_four(capsys):
    code, out, _ = run(capsys, "verify", "--claim", "Thm4.1", "--n", "4")
    assert code == 0
    assert "pass" in out
    assert '"alpha": 888' in out and '"beta": 512' in out


def test_specialized_g3(capsys):
    code, out, _ = run(capsys, "det", "--n", "3", "--k", "2", "--subst", "x1=0,x2=0,y1=0,y2=0,z2=0")
    assert code == 0
    assert parse(VS, out) == expand_factored(VS, goldens.G3_SPECIAL_FACTORS)


def test_gram_json_round_trip(capsys, tmp_path):
    path = tmp_path / "g2.json"
    assert main(["gram", "--n", "2", "--format", "json", "--output", str(path)]) == 0
    code, out, _ = run(capsys, "det", "--from-file", str(path))
    assert code == 0
    assert out.strip() == _det(2).to_string()


def test_worker_count_independence(capsys):
    outputs = set()
    for jobs in ("1", "3"):
        for cmd in (["gram", "--n", "2", "--format", "json"], ["det", "--n", "2", "--k", "1", "--format", "json"]):
            code, out, _ = run(capsys, *cmd, "--jobs", jobs)
            assert code == 0
            outputs.add((cmd[0], out))
    assert len(outputs) == 2


def test_env_jobs(capsys, monkeypatch):
    monkeypatch.setenv("GRAMHOLES_JOBS", "2")
    code, out, _ = run(capsys, "gram", "--n", "1")
    assert code == 0 and len(out.splitlines()) == 4
    monkeypatch.setenv("GRAMHOLES_JOBS", "many")
    assert run(capsys, "gram", "--n", "1")[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["det"],
        ["det", "--n", "0"],
        ["det", "--n", "1", "--subst", "q=1"],
        ["det", "--n", "1", "--subst", "x1"],
        ["det", "--n", "1", "--subst", "x1=(d"],
        ["det", "--n", "1", "--engine", "magic"],
        ["frobnicate", "--n", "1"],
        ["verify", "--claim", "Nope"],
        ["subst", "--n", "1"],
        ["delta", "--n", "2", "--k", "3"],
        ["det", "--n", "1", "--jobs", "0"],
        ["det", "--from-file", "/nonexistent/g.json"],
    ],
)
def test_bad_arguments_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_cap_refusal_exit_3(capsys):
    code, _, err = run(capsys, "det", "--n", "4")
    assert code == 3 and "cap" in err
    assert run(capsys, "gram", "--n", "5")[0] == 3
    assert run(capsys, "det", "--n", "2", "--cap", "10")[0] == 3


def test_verification_failure_exit_1(capsys):
    code, out, _ = run(capsys, "verify", "--claim", "Sec7.1.G1")
    assert code == 1
    assert "fail" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--claim", "Thm4.1", "--claim", "Sec1.count", "--n", "3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert [r["claim"] for r in data] == ["Sec1.count", "Thm4.1"]
    assert set(data[0]) == {"claim", "scope", "verdict", "witness", "elapsed_seconds"}


def test_enum_formats(capsys):
    code, out, _ = run(capsys, "enum", "--n", "2", "--k", "2", "--format", "json")
    assert code == 0 and len(json.loads(out)) == 18
    code, out, _ = run(capsys, "enum", "--n", "2", "--k", "1", "--format", "csv")
    assert out.splitlines()[0] == "index,matching,holes" and len(out.splitlines()) == 7
    code, out, _ = run(capsys, "enum", "--n", "3", "--k", "0")
    assert out.splitlines()[-1] == "# 5 diagrams"


def test_gram_csv_and_subst(capsys):
    code, out, _ = run(capsys, "gram", "--n", "1", "--format", "csv")
    assert out.startswith("# n,1,k,2")
    code, out, _ = run(capsys, "subst", "--n", "1", "--subst", "z1=d,z3=0")
    rows = [line.split() for line in out.splitlines()]
    assert rows[1][1] == "1*d" and rows[1][2] == "0"


def test_blocks_delta_reduce(capsys):
    code, out, _ = run(capsys, "blocks", "--n", "2", "--format", "json")
    blocks = json.loads(out)
    assert [b["dim"] for b in blocks] == [9, 9]
    code, out, _ = run(capsys, "delta", "--n", "3")
    assert out.strip() == "delta(3) = d^144 z1^96"
    code, out, _ = run(capsys, "reduce", "--n", "2", "--format", "json")
    data = json.loads(out)
    assert data["reduced_dim"] == 10 and data["unit_power"] == 4


def test_det_json_is_canonical(capsys):
    _, a, _ = run(capsys, "det", "--n", "1", "--format", "json")
    _, b, _ = run(capsys, "det", "--n", "1", "--format", "json", "--no-symmetry")
    da, db = json.loads(a), json.loads(b)
    assert da["determinant"] == db["determinant"]
    assert "elapsed_seconds" not in da
    assert da["rotation_blocks"] == [2, 2] and db["rotation_blocks"] is None


def test_console_script_exit_codes():
    ok = subprocess.run([sys.executable, "-m", "gramholes.cli", "delta", "--n", "2"], capture_output=True, text=True)
    assert ok.returncode == 0 and ok.stdout.strip() == "delta(2) = d^20 z1^16"
    bad = subprocess.run([sys.executable, "-m", "gramholes.cli", "delta"], capture_output=True, text=True)
    assert bad.returncode == 2
