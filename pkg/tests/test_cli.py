import json
import subprocess
import sys

import pytest

from rooktds.cli import main

FIG2_GRID = "3 4\n0011\n0011\n1111\n"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gamma(capsys):
    assert run(capsys, "gamma", "3", "4")[:2] == (0, "gamma = 8 (regime SmallN)\n")
    code, out, _ = run(capsys, "gamma", "2", "2")
    assert code == 0 and "no 3TDS exists" in out


def test_construct_grid(capsys):
    assert run(capsys, "construct", "3", "4")[:2] == (0, FIG2_GRID)


def test_construct_formats(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "1", "1", "--format", "pbm")
    assert code == 0 and out == "no 3TDS exists\n"
    target = tmp_path / "m.json"
    assert run(capsys, "construct", "6", "6", "--format", "json", "-o", str(target))[0] == 0
    data = json.loads(target.read_text())
    assert data["n"] == data["m"] == 6
    assert sum(r.count("1") for r in data["rows"]) == 14


def test_verify(capsys, tmp_path):
    f = tmp_path / "fig2.txt"
    f.write_text(FIG2_GRID)
    code, out, _ = run(capsys, "verify", str(f))
    assert code == 0
    assert "3TDS: yes" in out and "ones: 8" in out and "components: 1" in out
    code, out, _ = run(capsys, "verify", str(f), "--k", "4")
    assert code == 1 and "4TDS: no" in out


def test_verify_parse_error(capsys, tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("2 2\n01\n2x\n")
    code, _, err = run(capsys, "verify", str(f))
    assert code == 2 and "line 3" in err


def test_verify_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "verify", str(tmp_path / "nope.txt"))
    assert code == 2 and "I/O error" in err


def test_solve(capsys):
    code, out, _ = run(capsys, "solve", "3", "3", "--seed-upper-bound")
    assert code == 0
    assert "status: Optimal" in out and "value: 8" in out
    code, out, _ = run(capsys, "solve", "1", "3")
    assert code == 0 and "no 3TDS exists" in out
    code, out, _ = run(capsys, "solve", "2", "2", "--k", "1", "--naive")
    assert code == 0 and "value: 2" in out


def test_solve_aborted(capsys):
    code, out, _ = run(capsys, "solve", "6", "6", "--node-budget", "5")
    assert code == 1 and "status: Aborted" in out


def test_table_and_check(capsys):
    code, out, _ = run(capsys, "table", "--max-n", "2", "--max-m", "3", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "n,m,gamma,regime,construct_ones,oracle_value"
    code, out, _ = run(capsys, "check", "--max-n", "3", "--max-m", "3", "--oracle-limit", "9")
    assert code == 0 and "FAIL" not in out
    code, out, _ = run(capsys, "check", "--max-n", "4", "--max-m", "6")
    assert code == 1 and "FAIL diagonal_step" in out


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as info:
        main(["gamma", "0", "3"])
    assert info.value.code == 2
    assert run(capsys, "check", "--max-n", "5", "--max-m", "4")[0] == 2


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "rooktds", "table", "--max-n", "4", "--max-m", "6", "--oracle-limit", "16"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a
