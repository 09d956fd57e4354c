"""Command-line surface: formats, exit codes, determinism."""

import csv
import io
import json
import subprocess
import sys
from types import SimpleNamespace

import sol3ring.cli as cli
from sol3ring import SolGroupSpec
from sol3ring.buindex import CrossCheckMismatchError


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_text(capsys):
    code, out, err = run_cli(capsys, "analyze", "mapping-torus", "1", "2", "2", "5")
    assert code == 0
    assert "C6a" in out
    assert "H*" in out and "rho" in out
    assert "bu" in out.lower() or "rho: 1" in out


def test_analyze_json_is_deterministic(capsys):
    args = ("verify", "mapping-torus", "1", "2", "2", "5", "--format", "json")
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["schema"] == "sol3/1"
    assert doc["case"]["id"] == "C6a"
    assert doc["bu"]["rho"] == {"index": 1, "rule": 1}
    assert doc["cubes"]["sigma"] == 1 and doc["cubes"]["sigma+psi"] == 0
    assert doc["oracle"]["agree"] is True
    assert doc["invariants"]["beta"] == 3


def test_analyze_csv(capsys):
    code, out, err = run_cli(capsys, "analyze", "union", "1", "2", "1", "3",
                             "--format", "csv")
    assert code == 0
    lines = [l for l in out.splitlines() if not l.startswith("#")]
    rows = list(csv.reader(lines))
    assert rows[0] == cli.CSV_HEADER
    assert rows[1][:7] == ["union", "1", "2", "1", "3", "1", ""]
    assert rows[1][10] == "Ub-2mod4"
    assert rows[1][12] == "U=2;V=2;U+V=2;Y=3;U+Y=3;V+Y=3;U+V+Y=3"


def test_invalid_input_exits_2(capsys):
    code, out, err = run_cli(capsys, "analyze", "mapping-torus", "1", "0", "0", "1")
    assert code == 2
    assert "error:" in err

    code, out, err = run_cli(capsys, "analyze", "union", "1", "1", "1", "1")
    assert code == 2
    assert "error:" in err


def test_enumerate_small_bound(capsys):
    code, out, err = run_cli(capsys, "enumerate", "--bound", "1")
    assert code == 0
    lines = [l for l in out.splitlines() if l and not l.startswith("#")]
    assert lines[0].split(",")[0] == "family"
    assert len(lines) == 1 + 8  # header plus the eight valid inputs
    assert "# case frequencies: C1=8" in out


def test_enumerate_with_verify_reports_zero_disagreements(capsys):
    code, out, err = run_cli(capsys, "enumerate", "--bound", "1", "--verify")
    assert code == 0
    assert "# disagreements: 0" in out


def test_enumerate_bad_bound(capsys):
    code, out, err = run_cli(capsys, "enumerate", "--bound", "0")
    assert code == 2
    assert "error" in err


def test_fixtures_command(capsys):
    code, out, err = run_cli(capsys, "fixtures")
    assert code == 0
    lines = [l for l in out.splitlines() if l]
    assert len(lines) == 4
    assert all(l.startswith("pass") for l in lines)


def test_verification_disagreement_exits_3(capsys, monkeypatch):
    real_verify = cli.verify

    def fake_verify(spec, classified, triples=True):
        report = real_verify(spec, classified, triples)
        fields = {f: getattr(report, f) for f in (
            "h1_dim", "h1_agree", "abelianization", "ab_agree", "h2_kernel",
            "h2_classifier", "h2_agree", "triple_status", "triple_count",
            "triple_agree", "pd_ok", "wu_ok")}
        fields["wu_ok"] = False
        fields["agree"] = False
        return SimpleNamespace(**fields)

    monkeypatch.setattr(cli, "verify", fake_verify)
    code, out, err = run_cli(capsys, "verify", "mapping-torus", "2", "1", "1", "1")
    assert code == 3
    assert "disagreement" in err


def test_crosscheck_mismatch_exits_3(capsys, monkeypatch):
    def raising_bu(spec, classified):
        raise CrossCheckMismatchError(spec, "C1", "rho", 2, 1)

    monkeypatch.setattr(cli, "bu_rules", raising_bu)
    code, out, err = run_cli(capsys, "analyze", "mapping-torus", "2", "1", "1", "1")
    assert code == 3
    assert "verification mismatch" in err


def test_enumerate_survives_closed_pipe():
    # a reader like head closing the stream early must not leak a traceback
    proc = subprocess.Popen(
        [sys.executable, "-m", "sol3ring.cli", "enumerate", "--bound", "7"],
        stdout=subprocess.PIPE,
        stderr=subprocess.PIPE,
    )
    proc.stdout.readline()
    proc.stdout.close()
    err = proc.stderr.read()
    proc.stderr.close()
    proc.wait(timeout=60)
    assert b"Traceback" not in err
