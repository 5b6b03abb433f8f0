from __future__ import annotations

import json
import subprocess
import sys

import pytest

from roughcayley.cli import main

D4_R = "P,P2,P3,Pe,P2e,P3e"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestEnumerate:
    def test_cyclic_8(self, capsys):
        code, out, _ = run(capsys, "enumerate", "cyclic:8")
        assert code == 0
        assert "normal subgroups (4):" in out
        for line in ("  {1, 7}", "  {2, 6}", "  {4}", "  {1, 2, 6, 7}"):
            assert line in out.splitlines()

    def test_dihedral_3(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--group", "dihedral:3")
        block = out.split("normal subgroups (3):\n")[1].split("connection sets")[0]
        assert block.splitlines() == ["  {1}", "  {1, P, P2}", "  {1, P, P2, e, Pe, P2e}"]

    def test_refuses_large_group(self, capsys):
        code, _, err = run(capsys, "enumerate", "cyclic:17")
        assert code == 2 and "--sample" in err

    def test_sampled_large_group(self, capsys, tmp_path):
        code, out, _ = run(capsys, "enumerate", "dihedral:9", "--sample", "5", "--json", str(tmp_path / "e.json"))
        doc = json.loads((tmp_path / "e.json").read_text())
        assert code == 0 and doc["sampled"] and len(doc["connection_sets"]) == 5

    def test_vertex_sets_for_s(self, capsys):
        code, out, _ = run(capsys, "enumerate", "cyclic:4", "--S", "2")
        assert "  {0, 2}" in out.split("vertex sets")[1]


class TestApprox:
    def test_edge_family_positional(self, capsys):
        code, out, _ = run(capsys, "approx", "edge", "cyclic:8", "--N", "0,4", "--S", "1,2,6,7")
        assert code == 0
        assert "lower    vertices {0, 1, 2, 3, 4, 5, 6, 7} connection {2, 6}" in out
        assert "connection {1, 2, 3, 5, 6, 7}" in out

    def test_full_family_outputs(self, capsys, tmp_path):
        code, _, _ = run(
            capsys, "approx", "full", "dihedral:4", "--N", "1,P2", "--R", D4_R, "--S", "e",
            "--dot", str(tmp_path), "--json", str(tmp_path / "report.json"),
        )
        assert code == 0
        assert sorted(p.name for p in tmp_path.iterdir()) == [
            "lower.dot", "original.dot", "report.json", "upper.dot"
        ]
        doc = json.loads((tmp_path / "report.json").read_text())
        assert doc["lower"]["vertex_count"] == 4 and doc["lower"]["edge_count"] == 0
        assert doc["upper"]["connection"] == ["e", "P2e"]

    def test_strict_flag(self, capsys):
        code, _, err = run(capsys, "approx", "vertex", "dihedral:4", "--N", "1,P2", "--R", D4_R, "--S", "e", "--strict")
        assert code == 2 and "e" in err

    @pytest.mark.parametrize(
        "argv, needle",
        [
            (["approx", "edge", "cyclic:8", "--N", "0,4", "--S", "1,9"], "9"),
            (["approx", "edge", "cyclic:8", "--N", "1", "--S", "1,7"], "normal"),
            (["approx", "vertex", "cyclic:8", "--N", "0", "--S", "1,7"], "--R"),
            (["approx", "edge", "--N", "0", "--S", "1,7"], "group"),
        ],
    )
    def test_errors_exit_2(self, capsys, argv, needle):
        code, _, err = run(capsys, *argv)
        assert code == 2 and needle in err


class TestCheck:
    @pytest.mark.parametrize(
        "argv, code",
        [
            (["connected", "cyclic:8", "--S", "2,6"], 1),
            (["minimal", "cyclic:8", "--S", "1,7"], 0),
            (["definable", "dihedral:4", "--N", "1", "--R", D4_R], 0),
            (["edge-generating", "cyclic:8", "--N", "0,4", "--S", "1,2,6,7", "--side", "lower"], 1),
            (["optimal-connected", "cyclic:8", "--S", "1,7"], 0),
            (["edge-minimal", "cyclic:8", "--S", "1,7"], 1),
            (["orbit-definable", "dihedral:4", "--N", "1", "--R", D4_R, "--S", "e"], 1),
            (["normal", "dihedral:3", "--N", "1,e"], 1),
        ],
    )
    def test_verdicts(self, capsys, argv, code):
        got, out, _ = run(capsys, "check", *argv)
        assert got == code
        assert out.strip().endswith("true" if code == 0 else "false")

    def test_missing_argument(self, capsys):
        code, _, err = run(capsys, "check", "connected", "cyclic:8")
        assert code == 2 and "--S" in err


class TestLawsuite:
    def test_single_group_prints_witness(self, capsys):
        code, out, _ = run(capsys, "lawsuite", "cyclic:4", "--only", "set")
        assert code == 1
        assert "FAIL set.meet_modulus_lower" in out and "witness: G=cyclic:4" in out
        assert "PASS set.sandwich" in out

    def test_passing_selection_exits_0(self, capsys):
        code, out, _ = run(capsys, "lawsuite", "cyclic:8", "--only", "set.upper_union", "--only", "set.sandwich")
        assert code == 0 and "0 failing check(s)" in out

    def test_converse_regressions_run_for_d3(self, capsys):
        code, out, _ = run(capsys, "lawsuite", "dihedral:3")
        lines = [l for l in out.splitlines() if "converse." in l]
        assert len(lines) == 6 and all(l.strip().startswith("PASS") for l in lines)

    def test_size_refusal(self, capsys):
        code, _, err = run(capsys, "lawsuite", "cyclic:20")
        assert code == 2

    def test_parallel_matches_serial(self, capsys, tmp_path):
        run(capsys, "lawsuite", "fleet:small", "--only", "cayley", "--json", str(tmp_path / "a.json"))
        run(capsys, "lawsuite", "fleet:small", "--only", "cayley", "--jobs", "2", "--json", str(tmp_path / "b.json"))
        assert (tmp_path / "a.json").read_text() == (tmp_path / "b.json").read_text()


class TestExport:
    def test_group_file_round_trip(self, capsys, tmp_path):
        path = tmp_path / "d4.json"
        assert run(capsys, "export", "dihedral:4", "--out", str(path))[0] == 0
        code, out, _ = run(capsys, "enumerate", "--group", str(path))
        assert code == 0 and "normal subgroups (6):" in out

    def test_dot_to_stdout(self, capsys):
        code, out, _ = run(capsys, "export", "cyclic:4", "--S", "1,3")
        assert code == 0 and out.count(" -- ") == 4


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "roughcayley", "check", "minimal", "cyclic:8", "--S", "1,7"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "minimal cyclic:8: true"


def test_usage_error_exit_code():
    proc = subprocess.run([sys.executable, "-m", "roughcayley", "frobnicate"], capture_output=True, text=True)
    assert proc.returncode == 2
