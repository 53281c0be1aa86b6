"""Command-line interface: wrapping, formats, determinism, exit codes."""

import json

import numpy as np
import pytest

from neartoeplitz import MatrixConfig, exact_infinity_norm, trace_inverse
from neartoeplitz.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestReports:
    def test_bounds_published_row(self, capsys):
        code, out, _ = run_cli(capsys, "bounds", "--n", "10", "--b", "2", "--btilde", "5.93")
        rec = json.loads(out)
        assert code == 0
        assert rec["command"] == "bounds"
        assert rec["branch"] == "btilde_gt_1"
        assert rec["outputs"]["upper"] == pytest.approx(11.139, abs=5e-4)

    def test_singular_known_root(self, capsys):
        code, out, _ = run_cli(capsys, "singular", "--n", "5", "--b", "2", "--btilde", "0.5")
        rec = json.loads(out)
        assert code == 0
        assert rec["outputs"]["singular"] is True
        assert rec["outputs"]["delta_test"] is True

    def test_trace_toeplitz(self, capsys):
        code, out, _ = run_cli(capsys, "trace", "--n", "4", "--b", "2", "--btilde", "2")
        assert code == 0
        assert json.loads(out)["outputs"]["trace"] == pytest.approx(4.0)

    def test_entry_value(self, capsys):
        _, out, _ = run_cli(capsys, "entry", "--n", "5", "--b", "2", "--btilde", "2",
                            "--i", "3", "--j", "2")
        assert json.loads(out)["outputs"]["value"] == pytest.approx(1.0)

    def test_entry_toeplitz_flag(self, capsys):
        _, out, _ = run_cli(capsys, "entry", "--n", "5", "--b", "2", "--btilde", "9.9",
                            "--i", "5", "--j", "1", "--toeplitz")
        assert json.loads(out)["outputs"]["value"] == pytest.approx(1 / 6)

    def test_invert_matches_library(self, capsys):
        _, out, _ = run_cli(capsys, "invert", "--n", "5", "--b", "2", "--btilde", "3")
        rec = json.loads(out)
        from neartoeplitz import assemble_inverse

        entries = np.array(rec["outputs"]["entries"])
        expected = assemble_inverse(MatrixConfig(5, 2, 3.0)).entries
        assert np.max(np.abs(entries - expected)) <= 1e-9

    def test_rowsum_single_and_full(self, capsys):
        _, out, _ = run_cli(capsys, "rowsum", "--n", "4", "--b", "2", "--btilde", "2", "--i", "2")
        assert json.loads(out)["outputs"]["rowsum"] == pytest.approx(3.0)
        _, out, _ = run_cli(capsys, "rowsum", "--n", "4", "--b", "2", "--btilde", "2")
        rec = json.loads(out)
        assert len(rec["outputs"]["values"]) == 4
        assert rec["outputs"]["upper"] == pytest.approx(25 / 8)

    def test_norm_wraps_library(self, capsys):
        _, out, _ = run_cli(capsys, "norm", "--n", "13", "--b", "-2", "--btilde", "-6.28")
        got = json.loads(out)["outputs"]["norm"]
        assert got == pytest.approx(exact_infinity_norm(MatrixConfig(13, -2, -6.28)), rel=1e-9)

    def test_signs_pattern(self, capsys):
        _, out, _ = run_cli(capsys, "signs", "--n", "6", "--b", "2", "--btilde", "0")
        pattern = json.loads(out)["outputs"]["pattern"]
        assert pattern[1][3] == 0
        assert pattern[0][1] == -1

    def test_solve_bvp_expected_rate(self, capsys):
        code, out, _ = run_cli(
            capsys, "solve-bvp", "--n", "50", "--b", "2", "--btilde", "2",
            "--length", "0.5", "--k", "1", "--nonlinearity", "fisher",
        )
        rec = json.loads(out)
        assert code == 0
        assert rec["outputs"]["expected_rate"] == pytest.approx(0.0325, abs=5e-4)
        assert rec["outputs"]["converged"] is True
        assert len(rec["outputs"]["solution"]) == 50

    def test_solve_bvp_trivial(self, capsys):
        _, out, _ = run_cli(
            capsys, "solve-bvp", "--n", "10", "--b", "2", "--btilde", "2",
            "--length", "1", "--k", "0", "--nonlinearity", "fisher",
        )
        rec = json.loads(out)
        assert rec["outputs"]["converged"] is True
        assert rec["outputs"]["iterations"] <= 2


class TestReproduce:
    def test_table5_expected_column(self, capsys):
        code, out, _ = run_cli(capsys, "reproduce", "table5")
        assert code == 0
        lines = out.strip().splitlines()
        header = lines[0].split(",")
        rows = [dict(zip(header, line.split(","))) for line in lines[1:]]
        assert len(rows) == 7
        published = (0.0163, 0.0325, 0.065, 0.13, 0.2601, 0.5202, 1.0404)
        for row, expect in zip(rows, published):
            assert float(row["expected_rate"]) == pytest.approx(expect, abs=1e-3)
            assert row["pass"] == "True"

    def test_table6_first_row(self, capsys):
        _, out, _ = run_cli(capsys, "reproduce", "table6")
        lines = out.strip().splitlines()
        header = lines[0].split(",")
        first = dict(zip(header, lines[1].split(",")))
        assert float(first["expected_rate"]) == pytest.approx(0.0003, abs=5e-5)
        assert first["pass"] == "True"

    def test_fig2_table_reproducible_row(self, capsys):
        _, out, _ = run_cli(capsys, "reproduce", "fig2_table")
        lines = out.strip().splitlines()
        assert len(lines) == 8
        header = lines[0].split(",")
        rows = [dict(zip(header, line.split(","))) for line in lines[1:]]
        first = rows[0]
        assert first["n"] == "10"
        assert float(first["norm"]) == pytest.approx(11.014, abs=5e-4)
        assert float(first["upper_bound"]) == pytest.approx(11.139, abs=5e-4)
        assert first["pass"] == "True"

    def test_fig3_table_shape(self, capsys):
        _, out, _ = run_cli(capsys, "reproduce", "fig3_table")
        assert len(out.strip().splitlines()) == 8


class TestFormatsAndDeterminism:
    def test_csv_format(self, capsys):
        _, out, _ = run_cli(capsys, "trace", "--n", "4", "--b", "2", "--btilde", "2",
                            "--format", "csv")
        assert out.splitlines()[0] == "field,value"
        assert "outputs.trace,4" in out

    def test_csv_matrix_rows(self, capsys):
        _, out, _ = run_cli(capsys, "signs", "--n", "5", "--b", "2", "--btilde", "-1",
                            "--format", "csv")
        pattern_lines = [line for line in out.splitlines() if line.startswith("outputs.pattern")]
        assert len(pattern_lines) == 5
        assert pattern_lines[0] == "outputs.pattern,-1,-1,-1,-1,1"

    def test_byte_identical_runs(self, capsys):
        _, first, _ = run_cli(capsys, "bounds", "--n", "13", "--b", "2", "--btilde", "-2.28")
        _, second, _ = run_cli(capsys, "bounds", "--n", "13", "--b", "2", "--btilde", "-2.28")
        assert first == second

    def test_out_file_matches_stdout(self, capsys, tmp_path):
        path = tmp_path / "report.json"
        _, out, _ = run_cli(capsys, "norm", "--n", "6", "--b", "2", "--btilde", "3",
                            "--out", str(path))
        assert path.read_text() == out

    def test_ten_significant_digits(self, capsys):
        _, out, _ = run_cli(capsys, "bounds", "--n", "10", "--b", "2", "--btilde", "5.93")
        assert "11.13919878" in out


class TestExitCodes:
    def test_singular_is_3(self, capsys):
        code, out, err = run_cli(capsys, "norm", "--n", "5", "--b", "2", "--btilde", "1")
        assert code == 3
        assert out == ""
        assert json.loads(err)["error"]["type"] == "SingularMatrixError"

    def test_usage_is_2(self, capsys):
        code, _, err = run_cli(capsys, "trace", "--n", "3", "--b", "2", "--btilde", "2")
        assert code == 2
        assert "error" in json.loads(err)

    def test_index_error_is_2(self, capsys):
        code, _, _ = run_cli(capsys, "entry", "--n", "5", "--b", "2", "--btilde", "3",
                             "--i", "9", "--j", "1")
        assert code == 2

    @pytest.mark.filterwarnings("ignore:overflow")
    def test_divergence_is_4(self, capsys):
        code, _, err = run_cli(
            capsys, "solve-bvp", "--n", "10", "--b", "2", "--btilde", "2",
            "--length", "1", "--k", "3", "--nonlinearity", "bratu",
        )
        assert code == 4
        payload = json.loads(err)
        assert payload["error"]["type"] == "DivergenceError"
        assert payload["partial"]["iterations"] > 0

    def test_bad_flag_raises_system_exit(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["trace", "--n", "4", "--b", "7", "--btilde", "2"])
        assert err.value.code == 2

    def test_unknown_table_rejected(self, capsys):
        with pytest.raises(SystemExit):
            main(["reproduce", "table9"])


def test_cli_is_thin_wrapper(capsys):
    """CLI numbers must equal direct library calls bit for bit (before rounding)."""
    _, out, _ = run_cli(capsys, "trace", "--n", "9", "--b", "-2", "--btilde", "-4.5")
    got = json.loads(out)["outputs"]["trace"]
    lib = trace_inverse(MatrixConfig(9, -2, -4.5))
    assert got == float(f"{lib:.10g}")
