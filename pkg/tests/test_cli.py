from __future__ import annotations

import json
import shutil
import subprocess
import sys

import pytest

from signed_magic.cli import main
from signed_magic.fixtures import fixture
from signed_magic.io import GridDocument, from_json, to_json


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_exists(capsys):
    assert run(capsys, "exists", 2, 7, 7, 2)[:2] == (0, "exists\n")
    assert run(capsys, "exists", 2, 5, 5, 2)[:2] == (1, "does not exist\n")
    code, _, err = run(capsys, "exists", 3, 4, 2, 5)
    assert code == 2 and err.startswith("inadmissible (")


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["exists", "1", "2"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    assert run(capsys, "generate", "sma", 1, 2, 3)[0] == 2


def test_generate_smas_matches_fixture(capsys):
    code, out, _ = run(capsys, "generate", "smas", 5, 7, 2, "--format", "json")
    assert code == 0
    assert out == to_json(GridDocument.for_set(fixture("fig1")))


def test_generate_sma_and_verify(tmp_path, capsys):
    path = tmp_path / "a.json"
    assert run(capsys, "generate", "sma", 10, 14, 7, 5, "--out", path)[0] == 0
    doc = json.loads(path.read_text())
    assert (doc["rows"], doc["cols"]) == (10, 14)
    code, out, _ = run(capsys, "verify", path)
    assert code == 0 and out.startswith("PASS")


def test_generate_external_and_nonexistent(capsys):
    code, _, err = run(capsys, "generate", "smas", 7, 7, 8)
    assert code == 3 and "external IHS construction required" in err
    assert "c = 0 mod 4" in err
    code, _, err = run(capsys, "generate", "sma", 2, 5, 5, 2)
    assert code == 1 and "does not exist" in err
    assert run(capsys, "generate", "smas", 5, 5, 2)[0] == 2


def test_generate_with_ihs_file(tmp_path, capsys):
    from signed_magic.search import SearchBudget, heuristic_ihs

    ihs = heuristic_ihs(3, 4, 1, SearchBudget(seed=2)).witness
    p = tmp_path / "ihs.json"
    p.write_text(to_json(GridDocument.for_set(ihs, "ihs")))
    # a 3x4 IHS does not fit a 7x7 request
    code, _, err = run(capsys, "generate", "smas", 7, 7, 8, "--ihs", p)
    assert code == 4
    assert run(capsys, "verify", p)[0] == 0


def test_verify_detects_corruption(tmp_path, capsys):
    p = tmp_path / "fig1.csv"
    assert run(capsys, "generate", "smas", 5, 7, 2, "--format", "csv", "--out", p)[0] == 0
    assert run(capsys, "verify", p)[0] == 0
    text = p.read_text().replace("\n10,-4,", "\n-10,-4,", 1)
    p.write_text(text)
    code, out, _ = run(capsys, "verify", p)
    assert code == 1
    assert "row 1" in out and "col 1" in out


def test_verify_with_declared_mismatch(tmp_path, capsys):
    p = tmp_path / "fig1.json"
    p.write_text(to_json(GridDocument.for_set(fixture("fig1"))))
    code, out, _ = run(capsys, "verify", p, "--expect", 5, 7, 4)
    assert code == 1 and "coverage" in out


def test_io_errors(tmp_path, capsys):
    assert run(capsys, "verify", tmp_path / "missing.json")[0] == 4
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert run(capsys, "verify", bad)[0] == 4
    out_dir = tmp_path / "no" / "such" / "dir" / "x.json"
    assert run(capsys, "generate", "smas", 5, 7, 2, "--out", out_dir)[0] == 4


def test_search(capsys, tmp_path):
    code, _, err = run(capsys, "search", 2, 5, 5, 2)
    assert code == 1 and "ProvenNonExistent" in err
    p = tmp_path / "w.json"
    code, _, err = run(capsys, "search", 6, 7, 7, 6, "--out", p)
    assert code == 0 and "Found" in err
    assert from_json(p.read_text()).meta == {"m": 6, "n": 7, "s": 7, "k": 6}
    assert run(capsys, "verify", p)[0] == 0
    code, _, err = run(capsys, "search", 6, 6, 3, 3, "--budget", 10)
    assert code == 5 and "BudgetExhausted" in err


def test_route(capsys):
    code, out, _ = run(capsys, "route", 6, 13, 3)
    assert code == 0 and out.count("6xb-widen") == 2
    assert run(capsys, "route", 7, 7, 8)[0] == 3


def test_latex(capsys):
    code, out, _ = run(capsys, "generate", "smas", 6, 5, 2, "--format", "latex")
    assert code == 0 and out.count("\\begin{tabular}") == 2


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    assert "FAIL" not in out


def test_console_script():
    exe = shutil.which("signed-magic")
    cmd = [exe] if exe else [sys.executable, "-m", "signed_magic"]
    res = subprocess.run(cmd + ["exists", "2", "7", "7", "2"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "exists\n"
