"""CLI: exit codes, report output, preset CSVs and their determinism."""

import json

import numpy as np
import pytest

from laqc.cli import EXIT_IO, EXIT_OK, EXIT_VALIDATION, main, write_preset_csv


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCompute:
    def test_werner_singlet(self, capsys):
        code, out, _ = run(
            capsys, "compute", "--family", "werner", "--param", "1", "--format", "json"
        )
        assert code == EXIT_OK
        d = json.loads(out)
        assert abs(d["laqc"] - 1) < 1e-9
        assert abs(d["concurrence"] - 1) < 1e-9

    def test_product_family_all_zero(self, capsys):
        code, out, _ = run(
            capsys, "compute", "--family", "psi-minus-mix", "--param", "0",
            "--format", "json",
        )
        assert code == EXIT_OK
        d = json.loads(out)
        for key in ("classical", "laqc", "discord", "concurrence"):
            assert abs(d[key]) < 1e-9

    def test_bad_trace_names_invariant(self, capsys, tmp_path):
        rows = [
            [{"re": 0.225 if i == j else 0.0, "im": 0.0} for j in range(4)]
            for i in range(4)
        ]
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({"matrix": rows}))
        code, _, err = run(capsys, "compute", "--matrix", str(bad))
        assert code == EXIT_VALIDATION
        assert "unit-trace" in err

    def test_missing_source_is_validation_error(self, capsys):
        code, _, err = run(capsys, "compute", "--param", "0.5")
        assert code == EXIT_VALIDATION

    def test_missing_file_is_io_error(self, capsys):
        code, _, _ = run(capsys, "compute", "--matrix", "/nonexistent/state.json")
        assert code == EXIT_IO


class TestOracleCommand:
    def test_werner_agreement(self, capsys):
        code, out, _ = run(
            capsys, "oracle", "--family", "werner", "--param", "0.5",
            "--grid", "16", "--format", "json",
        )
        assert code == EXIT_OK
        d = json.loads(out)
        assert d["diff_classical"] < 1e-5
        assert d["diff_laqc"] < 1e-5
        assert d["classical_degenerate"] is True

    def test_maximally_mixed_degenerate(self, capsys):
        code, out, _ = run(
            capsys, "oracle", "--family", "werner", "--param", "0",
            "--grid", "16", "--format", "json",
        )
        d = json.loads(out)
        assert abs(d["oracle_classical"]) < 1e-9
        assert abs(d["oracle_laqc"]) < 1e-9
        assert d["classical_degenerate"] is True


class TestChannelCommand:
    def test_ad_on_werner(self, capsys):
        code, out, _ = run(
            capsys, "channel", "--family", "werner", "--param", "0.8",
            "--channel", "amplitude-damping", "--p", "0.3", "--format", "json",
        )
        assert code == EXIT_OK
        d = json.loads(out)
        assert d["symmetry_class"] == "symmetric"
        assert abs(d["params"]["x3"] - 0.3) < 1e-12


class TestSweep:
    def test_fig4_columns_and_inequality(self, tmp_path):
        out = tmp_path / "fig4.csv"
        write_preset_csv("fig4", out, n=21)
        lines = out.read_text().splitlines()
        assert lines[0] == "F,gplus,g1"
        assert len(lines) == 22
        for line in lines[1:]:
            F, gplus, gone = map(float, line.split(","))
            assert gone - gplus >= -1e-9

    def test_fig1_nonnegative(self, tmp_path):
        out = tmp_path / "fig1.csv"
        write_preset_csv("fig1", out, n=11)
        lines = out.read_text().splitlines()
        assert lines[0] == "z,p,S"
        assert len(lines) == 1 + 11 * 11
        for line in lines[1:]:
            assert float(line.split(",")[2]) >= -1e-9

    def test_fig5_ordering(self, tmp_path):
        out = tmp_path / "fig5.csv"
        write_preset_csv("fig5", out, n=21)
        for line in out.read_text().splitlines()[1:]:
            F, laqc, qd, conc = map(float, line.split(","))
            if 0 < F < 1:
                assert laqc <= qd + 1e-9 <= conc + 2e-9

    def test_byte_identical_across_runs(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        write_preset_csv("fig2", a, n=6)
        write_preset_csv("fig2", b, n=6)
        assert a.read_bytes() == b.read_bytes()

    def test_newline_convention(self, tmp_path):
        out = tmp_path / "fig4.csv"
        write_preset_csv("fig4", out, n=5)
        raw = out.read_bytes()
        assert b"\r" not in raw
        assert raw.endswith(b"\n")

    def test_cli_unwritable_path(self, capsys):
        code, _, _ = run(
            capsys, "sweep", "--preset", "fig4", "--count", "5",
            "--out", "/nonexistent-dir/out.csv",
        )
        assert code == EXIT_IO

    def test_cli_writes_file(self, capsys, tmp_path):
        out = tmp_path / "fig3.csv"
        code, _, _ = run(
            capsys, "sweep", "--preset", "fig3", "--count", "5", "--out", str(out)
        )
        assert code == EXIT_OK
        assert out.read_text().splitlines()[0] == "z,p,Sprime"
