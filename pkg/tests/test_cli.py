from __future__ import annotations

import json
import subprocess
import sys

import pytest

from gieseker.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, json.loads(out) if out.strip() else None, err


def usage_error(capsys, *argv):
    with pytest.raises(SystemExit) as exc:
        main(list(argv))
    assert exc.value.code == 2
    return capsys.readouterr().err


def checks(report):
    return {c["id"]: c for c in report["checks"]}


def test_report_shape(capsys):
    code, rep, _ = run(capsys, "series", "ratio-3-7", "--betti", "1,0,1,0,1", "--order", "6")
    assert code == 0
    assert set(rep) == {"suite", "seed", "checks", "elapsed_ms"}
    ids = [c["id"] for c in rep["checks"]]
    assert ids == sorted(ids)
    for c in rep["checks"]:
        assert set(c) == {"id", "anchor", "status", "witness"}
        assert c["status"] in ("pass", "fail")


def test_series_kinds_pass(capsys):
    for argv in (
        ("series", "goettsche", "--betti", "1,0,0,0,1"),
        ("series", "macdonald", "--betti", "1,4,6,4,1", "--order", "4"),
        ("series", "hodge-3-8", "--hodge", "1,0,1;0,20,0;1,0,1", "--order", "4"),
        ("series", "theta", "--order", "3"),
        ("series", "yoshioka", "--order", "3"),
    ):
        code, rep, _ = run(capsys, *argv)
        assert code == 0, argv
        assert all(c["status"] == "pass" for c in rep["checks"])


def test_uhlenbeck_reports_normalization_finding(capsys):
    code, rep, _ = run(capsys, "series", "uhlenbeck-p2", "--order", "3")
    assert code == 0
    norm = checks(rep)["uhlenbeck-p2.global_normalization"]["witness"]
    assert norm["t_exponent"] == -8
    assert "finding" in norm


def test_bad_betti_is_usage_error(capsys):
    err = usage_error(capsys, "series", "goettsche", "--betti", "1,0,1,0,2")
    assert "b0 != b4" in err


def test_unknown_kind_is_usage_error(capsys):
    usage_error(capsys, "series", "nonsense")


def test_series_out(tmp_path, capsys):
    path = tmp_path / "series.json"
    code, _, _ = run(capsys, "series", "goettsche", "--order", "3", "--series-out", str(path))
    assert code == 0
    assert json.loads(path.read_text())


def test_fock_default(capsys):
    code, rep, _ = run(capsys, "fock", "--betti", "1,0,1,0,1", "--max-energy", "4")
    assert code == 0
    assert checks(rep)["fock.P2.relations"]["status"] == "pass"


def test_fock_rank_and_constants(capsys):
    code, rep, _ = run(capsys, "fock", "--rank", "2", "--recover-constants", "8")
    assert code == 0
    assert checks(rep)["constants.r2"]["witness"]["c_n"] == [str(-2 * n) for n in range(1, 9)]


def test_fock_pairing_files(tmp_path, capsys):
    zero = tmp_path / "zero.json"
    zero.write_text(json.dumps({"degrees": [0, 2, 4], "pairing": [[0, 0, 0], [0, 0, 0], [0, 0, 0]]}))
    code, rep, _ = run(capsys, "fock", "--pairing-matrix", str(zero), "--max-energy", "3")
    assert code == 0
    assert checks(rep)["fock.custom.relations"]["status"] == "pass"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"degrees": [0, 2, 4], "pairing": [[0, 0, 1], [0, 1, 0], [2, 0, 0]]}))
    assert "graded-symmetric" in usage_error(capsys, "fock", "--pairing-matrix", str(bad))


def test_fock_surface_option(capsys):
    code, rep, _ = run(capsys, "fock", "--surface", "abelian", "--max-energy", "2")
    assert code == 0


def test_schubert(capsys):
    code, rep, _ = run(capsys, "schubert", "--r", "4", "--n", "2")
    assert code == 0
    assert checks(rep)["schubert.excess_integral"]["witness"]["values"] == {"4,2": 6}
    assert "n <= r" in usage_error(capsys, "schubert", "--r", "2", "--n", "3")


def test_quot_is_deterministic(capsys):
    argv = ("quot", "--instances", "5", "--seed", "7", "--max-dim", "10", "--no-timing")
    code, first, _ = run(capsys, *argv)
    assert code == 0
    assert first["elapsed_ms"] == 0 and first["seed"] == 7
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_out_file_and_summary(tmp_path, capsys):
    path = tmp_path / "rep.json"
    code = main(["schubert", "--r", "3", "--n", "1", "--out", str(path), "--summary"])
    out, err = capsys.readouterr()
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["suite"] == "schubert"
    assert all(line.startswith("PASS") for line in err.strip().splitlines())


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "gieseker", "verify-all", "--quick", "--no-timing"],
        capture_output=True, text=True, timeout=120,
    )
    assert proc.returncode == 0, proc.stderr
    rep = json.loads(proc.stdout)
    assert rep["suite"] == "verify-all" and rep["elapsed_ms"] == 0
