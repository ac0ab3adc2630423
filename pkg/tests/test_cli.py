"""End-to-end command line behavior: outputs, reports, exit codes."""

import json
import subprocess
import sys

import pytest

from weilgraph import InputDocument, Report
from weilgraph.cli import main

THETA = '{"vertices": 2, "edges": [[0, 1], [0, 1], [0, 1]]}'
THETA_MODEL = (
    '{"vertices": 2, "edges": [[0, 1], [0, 1], [0, 1]],'
    ' "genera": [0, 0], "stabilizers": [2, 3, 2]}'
)


@pytest.fixture
def theta_file(tmp_path):
    path = tmp_path / "theta.json"
    path.write_text(THETA)
    return str(path)


@pytest.fixture
def theta_model_file(tmp_path):
    path = tmp_path / "theta_model.json"
    path.write_text(THETA_MODEL)
    return str(path)


def test_homology_human(theta_file, capsys):
    assert main(["homology", "--graph", theta_file]) == 0
    out = capsys.readouterr().out
    assert "genus 2" in out
    assert "c0: edges [0, 1]" in out
    assert "pairing is perfect: yes" in out


def test_homology_json(theta_file, capsys):
    assert main(["homology", "--graph", theta_file, "--json"]) == 0
    report = Report.from_json(capsys.readouterr().out.strip())
    assert report.command == "homology"
    assert report.input_digest == InputDocument.parse(THETA).digest()
    assert report.payload["genus"] == 2
    assert report.payload["cycles"] == [[0, 1], [0, 2]]
    assert report.payload["gram"] == [[1, 0], [0, 1]]
    assert report.payload["perfect"] is True


def test_cover_lift_and_agreement(theta_file, capsys):
    code = main(
        ["cover", "--graph", theta_file, "--gamma", "1", "--alpha", "0,1", "--json"]
    )
    assert code == 0
    payload = Report.from_json(capsys.readouterr().out.strip()).payload
    assert payload["connected"] is True
    assert payload["lift_count"] == 1
    assert payload["lift_sizes"] == [4]
    assert payload["pairing_cover"] == 1
    assert payload["pairing_algebraic"] == 1
    assert payload["agree"] is True


def test_cover_split_lift(theta_file, capsys):
    code = main(["cover", "--graph", theta_file, "--gamma", "1", "--alpha", "0,2"])
    assert code == 0
    out = capsys.readouterr().out
    assert "a cycle of length 2 and a cycle of length 2" in out
    assert "agreement: yes" in out


def test_cover_empty_gamma_disconnects(theta_file, capsys):
    assert main(["cover", "--graph", theta_file, "--gamma", ""]) == 0
    assert "cover is connected: no" in capsys.readouterr().out


def test_cover_dot_file(theta_file, tmp_path, capsys):
    dot_path = tmp_path / "cover.dot"
    code = main(
        ["cover", "--graph", theta_file, "--gamma", "1", "--dot", str(dot_path)]
    )
    assert code == 0
    text = dot_path.read_text()
    assert text.startswith("graph cover {")
    assert "style=dashed" in text
    assert f"wrote {dot_path}" in capsys.readouterr().out


def test_cover_dot_stdout(theta_file, capsys):
    assert main(["cover", "--graph", theta_file, "--gamma", "1", "--dot", "-"]) == 0
    assert "v0_a -- v1_b" in capsys.readouterr().out


def test_torsion(theta_model_file, capsys):
    assert main(["torsion", "--graph", theta_model_file, "--json"]) == 0
    payload = Report.from_json(capsys.readouterr().out.strip()).payload
    assert payload["two_torsion_order"] == 8
    assert payload["block_dimensions"] == [2, 0, 1]
    assert payload["nondegenerate"] is False
    assert payload["alternating"] is True
    assert payload["invertible"] is False


def test_torsion_human(theta_model_file, capsys):
    assert main(["torsion", "--graph", theta_model_file]) == 0
    out = capsys.readouterr().out
    assert "two-torsion order: 8" in out
    assert "weil form dimension: 3 = 2 + 0 + 1" in out


def test_tropical(theta_file, capsys):
    assert main(["tropical", "--graph", theta_file, "--r", "2"]) == 0
    out = capsys.readouterr().out
    assert "critical group of subdivision: Z/2 x Z/6" in out
    assert "r-torsion count: 4, expected 4" in out
    assert "verdict: PASS" in out


def test_tropical_json_nonsep(theta_file, capsys):
    code = main(
        ["tropical", "--graph", theta_file, "--r", "3", "--mode", "nonsep", "--json"]
    )
    assert code == 0
    payload = Report.from_json(capsys.readouterr().out.strip()).payload
    assert payload["torsion_count"] == 9 == payload["expected"]
    assert payload["verdict"] is True


def test_verify_passes(capsys):
    assert main(["verify", "--max-edges", "3"]) == 0
    out = capsys.readouterr().out
    assert "all sweeps passed" in out


def test_verify_json(capsys):
    assert main(["verify", "--max-edges", "2", "--r", "2", "--json"]) == 0
    report = Report.from_json(capsys.readouterr().out.strip())
    assert report.command == "verify"
    assert report.payload["ok"] is True
    assert len(report.payload["sweeps"]) == 4
    assert all(s["failures"] == 0 for s in report.payload["sweeps"])


def test_verify_inject_fault(capsys):
    assert main(["verify", "--max-edges", "2", "--inject-fault"]) == 4
    out = capsys.readouterr().out
    assert "FAILURES FOUND" in out
    assert "counterexample" in out


def test_bad_document_exit(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"vertices": 2}')
    assert main(["homology", "--graph", str(path)]) == 2
    assert "error:" in capsys.readouterr().err


def test_missing_file_exit(tmp_path, capsys):
    assert main(["homology", "--graph", str(tmp_path / "absent.json")]) == 2


def test_gamma_not_an_integer(theta_file, capsys):
    assert main(["cover", "--graph", theta_file, "--gamma", "x"]) == 2


def test_gamma_out_of_range(theta_file, capsys):
    assert main(["cover", "--graph", theta_file, "--gamma", "7"]) == 3


def test_alpha_not_simple(theta_file, capsys):
    # a single theta edge is not a cycle
    assert main(["cover", "--graph", theta_file, "--alpha", "0"]) == 3


def test_tropical_bad_r(theta_file, capsys):
    assert main(["tropical", "--graph", theta_file, "--r", "0"]) == 3


def test_missing_subcommand():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_stdin_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "weilgraph.cli", "homology", "--graph", "-", "--json"],
        input=THETA,
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)["payload"]
    assert payload["genus"] == 2
