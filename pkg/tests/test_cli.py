"""Command-line interface: exit codes, files, determinism, units."""

import json
import math
import os
import subprocess
import sys

import pytest

from powergeom.cli import main
from powergeom.scan_io import read_scan_csv


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestScan:
    def test_writes_csv_with_metadata(self, tmp_path, capsys):
        out = tmp_path / "det.csv"
        code, stdout, _ = run(["scan", "--model", "real", "--n", "64",
                               "--out", str(out)], capsys)
        assert code == 0
        assert "4096 records" in stdout
        table = read_scan_csv(str(out))
        assert len(table.rows) == 4096
        assert table.metadata["model"] == "real"
        assert table.metadata["n"] == "64"

    def test_rerun_is_byte_identical(self, tmp_path, capsys):
        a = tmp_path / "a.csv"
        b = tmp_path / "b.csv"
        for out in (a, b):
            assert run(["scan", "--model", "complex", "--n", "24",
                        "--out", str(out)], capsys)[0] == 0
        assert a.read_bytes() == b.read_bytes()

    def test_thread_env_does_not_change_bytes(self, tmp_path):
        outs = []
        for threads in ("1", "5"):
            out = tmp_path / f"t{threads}.csv"
            env = dict(os.environ, POWERGEOM_THREADS=threads)
            proc = subprocess.run(
                [sys.executable, "-m", "powergeom.cli", "scan", "--model",
                 "imaginary", "--n", "32", "--out", str(out)],
                capture_output=True, text=True, env=env)
            assert proc.returncode == 0, proc.stderr
            outs.append(out.read_bytes())
        assert outs[0] == outs[1]

    def test_json_format(self, tmp_path, capsys):
        out = tmp_path / "scan.json"
        code, _, _ = run(["scan", "--model", "real", "--n", "8",
                          "--format", "json", "--out", str(out)], capsys)
        assert code == 0
        data = json.loads(out.read_text())
        assert len(data["records"]) == 64

    def test_degree_unit_conversion(self, tmp_path, capsys):
        out = tmp_path / "deg.csv"
        code, _, _ = run(["scan", "--model", "real", "--n", "3",
                          "--unit", "deg", "--min", "-45", "--max", "45",
                          "--out", str(out)], capsys)
        assert code == 0
        table = read_scan_csv(str(out))
        assert float(table.metadata["a1_max"]) == pytest.approx(math.pi / 4)
        assert table.metadata["unit"] == "rad"

    def test_domain_error_exits_one(self, tmp_path, capsys):
        code, _, err = run(["scan", "--model", "real", "--max", "1.58",
                            "--out", str(tmp_path / "x.csv")], capsys)
        assert code == 1
        assert "error" in err

    def test_usage_error_exits_two(self, capsys):
        assert run(["scan", "--model", "real"], capsys)[0] == 2
        assert run(["scan", "--model", "nuclear", "--out", "x"], capsys)[0] == 2
        assert run(["frobnicate"], capsys)[0] == 2

    def test_asymmetric_domain_flags(self, tmp_path, capsys):
        out = tmp_path / "asym.csv"
        code, _, _ = run(["scan", "--model", "real", "--n", "4",
                          "--min", "-1.0", "--max", "1.0",
                          "--min2", "0.0", "--max2", "0.5",
                          "--out", str(out)], capsys)
        assert code == 0
        meta = read_scan_csv(str(out)).metadata
        assert float(meta["a2_min"]) == 0.0
        assert float(meta["a2_max"]) == 0.5


class TestDiagonal:
    def test_writes_and_summarizes_transitions(self, tmp_path, capsys):
        out = tmp_path / "diag.csv"
        code, stdout, _ = run(["diagonal", "--model", "complex", "--n", "101",
                               "--out", str(out)], capsys)
        assert code == 0
        assert "det zero crossings" in stdout
        assert "curvature spikes" in stdout
        table = read_scan_csv(str(out))
        assert table.metadata["command"] == "diagonal"
        assert all(r.a1 == r.a2 for r in table.rows)

    def test_spike_threshold_flag(self, tmp_path, capsys):
        out = tmp_path / "diag.csv"
        code, stdout, _ = run(["diagonal", "--model", "complex", "--n", "51",
                               "--spike-threshold", "10",
                               "--out", str(out)], capsys)
        assert code == 0
        assert "|R| > 10" in stdout


class TestClassify:
    def test_indefinite_diagonal_point(self, capsys):
        code, stdout, _ = run(["classify", "--model", "imaginary",
                               "--a1", "0.5", "--a2", "0.5"], capsys)
        assert code == 0
        data = json.loads(stdout)
        assert data["class"] == "INDEF"
        assert data["det"] < 0

    def test_degenerate_origin_has_null_curvature(self, capsys):
        code, stdout, _ = run(["classify", "--model", "real",
                               "--a1", "0", "--a2", "0"], capsys)
        assert code == 0
        data = json.loads(stdout)
        assert data["class"] == "DEGEN"
        assert data["curvature"] is None

    def test_degrees_accepted(self, capsys):
        code, stdout, _ = run(["classify", "--model", "imaginary", "--unit",
                               "deg", "--a1", "30", "--a2", "30"], capsys)
        assert code == 0
        assert json.loads(stdout)["a1"] == pytest.approx(math.pi / 6)

    def test_pole_angle_exits_one(self, capsys):
        code, _, err = run(["classify", "--model", "real",
                            "--a1", "1.5707963", "--a2", "0"], capsys)
        assert code == 1
        assert "pole" in err


class TestVerifyPaper:
    def test_report_file_deterministic(self, tmp_path, capsys):
        a = tmp_path / "a.json"
        b = tmp_path / "b.json"
        for out in (a, b):
            code, stdout, _ = run(["verify-paper", "--model", "real",
                                   "--samples", "100", "--seed", "7",
                                   "--out", str(out)], capsys)
            assert code == 0
            assert "5 verified, 0 discrepant" in stdout
        assert a.read_bytes() == b.read_bytes()

    def test_imaginary_report_lists_discrepancies(self, tmp_path, capsys):
        out = tmp_path / "imag.json"
        code, stdout, _ = run(["verify-paper", "--model", "imaginary",
                               "--samples", "60", "--seed", "1",
                               "--out", str(out)], capsys)
        assert code == 0  # discrepancies are surfaced, not fatal
        assert "METRIC_I_12" in stdout and "DET_I" in stdout
        data = json.loads(out.read_text())
        by_id = {q["id"]: q for q in data["quantities"]}
        assert by_id["METRIC_I_12"]["status"] == "DISCREPANT"
        assert by_id["DET_I"]["status"] == "DISCREPANT"
        assert by_id["CURV_I"]["status"] == "VERIFIED"

    def test_text_format_to_stdout(self, capsys):
        code, stdout, _ = run(["verify-paper", "--model", "complex",
                               "--samples", "25", "--format", "text"], capsys)
        assert code == 0
        assert "CURV_C" in stdout
        assert "VERIFIED" in stdout


class TestBusPower:
    def net(self, tmp_path):
        path = tmp_path / "net.json"
        path.write_text(json.dumps({
            "buses": [{"id": "b1", "vmag": 1.0, "delta": 0.0},
                      {"id": "b2", "vmag": 1.0, "delta": 0.0}],
            "branches": [{"from": "b1", "to": "b2", "ymag": 1.0,
                          "g": 1.0, "b": 0.0, "a": 0.0}],
        }))
        return str(path)

    def test_json_output(self, tmp_path, capsys):
        code, stdout, _ = run(["bus-power", self.net(tmp_path)], capsys)
        assert code == 0
        data = json.loads(stdout)
        assert data["injections"][0] == {"bus": "b1", "p": 1.0, "q": 0.0}

    def test_csv_output_to_file(self, tmp_path, capsys):
        out = tmp_path / "inj.csv"
        code, _, _ = run(["bus-power", self.net(tmp_path), "--format", "csv",
                          "--out", str(out)], capsys)
        assert code == 0
        assert out.read_text().splitlines()[0] == "bus,p,q"

    def test_dangling_branch_exits_one(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({
            "buses": [{"id": "b1"}],
            "branches": [{"from": "b1", "to": "zz"}],
        }))
        code, _, err = run(["bus-power", str(path)], capsys)
        assert code == 1
        assert "zz" in err

    def test_missing_file_exits_one(self, capsys):
        code, _, err = run(["bus-power", "/nonexistent/net.json"], capsys)
        assert code == 1


class TestPlotScript:
    def test_emits_script_for_grid(self, tmp_path, capsys):
        out = tmp_path / "g.csv"
        run(["scan", "--model", "real", "--n", "6", "--out", str(out)], capsys)
        code, stdout, _ = run(["plot-script", str(out), "--field",
                               "curvature"], capsys)
        assert code == 0
        assert "plot_curvature.py" in stdout

    def test_missing_scan_exits_one(self, capsys):
        code, _, err = run(["plot-script", "/nonexistent/scan.csv"], capsys)
        assert code == 1

    def test_foreign_schema_exits_one(self, tmp_path, capsys):
        bad = tmp_path / "bad.csv"
        bad.write_text("x,y\n1,2\n")
        code, _, err = run(["plot-script", str(bad)], capsys)
        assert code == 1
        assert "header" in err


class TestVerifySelf:
    def test_passes_and_prints_lines(self, capsys):
        code, stdout, _ = run(["verify-self", "--samples", "40"], capsys)
        assert code == 0
        assert "11/11 checks passed" in stdout
        assert stdout.count("[pass]") == 11


def test_console_entry_point():
    proc = subprocess.run(["powergeom", "--version"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
