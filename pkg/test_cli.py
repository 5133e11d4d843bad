#!/usr/bin/env python3
"""
Test script for the command-line verifier
Tests subcommands, report formats and exit codes
"""

import json
import sys

import pytest

from app import main as cli_main
from models.report import Report
from repository.suites import VerificationRunner


def _run(capsys, *argv):
    code = cli_main(list(argv))
    return code, capsys.readouterr().out


def test_obstruction_report(capsys):
    code, out = _run(capsys, "obstruction", "--cells", "8", "--json")
    assert code == 0
    document = json.loads(out)
    assert document["passed"] is True
    checks = {c["name"]: c for c in document["reports"][0]["checks"]}
    assert checks["h0"]["actual"] == "-1/12"
    assert checks["h1"]["actual"] == "-1/12"


def test_qloc_dims_report(capsys):
    code, out = _run(capsys, "qloc-dims", "--cells", "12", "--m", "1", "--n", "2", "--ell", "1", "--json")
    assert code == 0
    report = json.loads(out)["reports"][0]
    dims = next(c for c in report["checks"] if c["name"].startswith("H qloc"))
    assert dims["actual"] == "{1: 1, 2: 1}"


def test_text_report(capsys):
    code, out = _run(capsys, "verify-homology-model")
    assert code == 0
    assert "== verify-homology-model" in out
    assert "[FAIL]" not in out


def test_frob1_suite(capsys):
    code, _ = _run(capsys, "verify-frob1")
    assert code == 0


def test_failure_exit_code(capsys):
    code, out = _run(capsys, "obstruction", "--cells", "4")
    assert code == 1
    assert "[FAIL]" in out


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as excinfo:
        cli_main(["bogus"])
    assert excinfo.value.code == 2
    with pytest.raises(SystemExit) as excinfo:
        cli_main(["obstruction", "--cells", "eight"])
    assert excinfo.value.code == 2


def test_out_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, _ = _run(capsys, "verify-homology-model", "--out", str(target))
    assert code == 0
    assert json.loads(target.read_text(encoding="utf-8"))["passed"] is True


def test_fail_fast_stops_early():
    summary = VerificationRunner(cells=4).run_all(fail_fast=True)
    assert len(summary.reports) == 1
    assert not summary.passed
    assert summary.failing()


def test_run_all_covers_qloc_grid(monkeypatch):
    runner = VerificationRunner()
    calls = []

    def fake_qloc(m=1, n=1, cells=None, ell=None, breakdown=True):
        calls.append((m, n, cells, ell, breakdown))
        return Report(suite="qloc-dims")

    for suite in ("obstruction", "verify_homology_model", "verify_frob1", "verify_discrete", "verify_derham"):
        monkeypatch.setattr(runner, suite, lambda suite=suite: Report(suite=suite))
    monkeypatch.setattr(runner, "qloc_dims", fake_qloc)
    summary = runner.run_all()
    assert {(m, n, ell) for m, n, _, ell, _ in calls} == {
        (m, n, ell) for m, n in ((1, 1), (2, 1), (1, 2), (2, 2)) for ell in (1, 2)
    }
    assert {cells for _, _, cells, _, _ in calls} == {12}
    assert [ell for _, _, _, ell, breakdown in calls if breakdown] == [1, 1, 1, 1]
    assert len(summary.reports) == 5 + len(calls)


@pytest.mark.slow
def test_derham_suite(capsys):
    code, out = _run(capsys, "verify-derham", "--epsilon", "0.1", "--step-div", "400", "--json")
    assert code == 0
    checks = {c["name"]: c for c in json.loads(out)["reports"][0]["checks"]}
    assert abs(float(checks["half"]["actual"]) + 1.0 / 12.0) < 1e-6


@pytest.mark.slow
def test_discrete_suite(capsys):
    code, _ = _run(capsys, "verify-discrete", "--cells", "8", "--seed", "7")
    assert code == 0


def main():
    print("🧪 Testing command-line verifier")
    print("=" * 50)
    failed = 0
    for argv, want in (
        (["obstruction", "--cells", "8"], 0),
        (["verify-homology-model"], 0),
        (["verify-frob1"], 0),
        (["obstruction", "--cells", "4"], 1),
    ):
        code = cli_main(argv)
        if code == want:
            print(f"✅ {' '.join(argv)} -> {code}")
        else:
            failed += 1
            print(f"❌ {' '.join(argv)} -> {code}, expected {want}")
    return failed == 0


if __name__ == "__main__":
    sys.exit(0 if main() else 1)
