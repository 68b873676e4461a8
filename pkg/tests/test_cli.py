"""
Tests for the Command Line - Exit codes, output formats and determinism
"""

import json

import pytest
from click.testing import CliRunner

from formatters import ROW_FIELDS, parse_rows_csv
from main import EXIT_DOMAIN, EXIT_FAILED, EXIT_OK, EXIT_USAGE, cli, run


@pytest.fixture
def runner():
    return CliRunner()


class TestEval:
    """Test cases for the eval command."""

    def test_csv_header_and_anchor(self, runner):
        result = runner.invoke(cli, ["eval", "--bound", "polya", "--x", "0"])
        assert result.exit_code == EXIT_OK
        lines = result.stdout.splitlines()
        assert lines[0] == ",".join(ROW_FIELDS)
        row = parse_rows_csv(result.stdout)[0]
        assert row["bound"] == 0.5
        assert row["error"] == 0.0
        assert row["kind"] == "polya"
        assert row["out_of_validity"] is False

    def test_repeated_abscissae(self, runner):
        result = runner.invoke(cli, ["eval", "--bound", "eidous", "--x", "0.5", "--x", "2.9"])
        rows = parse_rows_csv(result.stdout)
        assert [r["x"] for r in rows] == [0.5, 2.9]
        assert rows[1]["error"] == pytest.approx(5.78e-5, rel=0.02)
        assert rows[1]["error"] == rows[1]["bound"] - rows[1]["reference"]

    def test_out_of_validity_flag(self, runner):
        result = runner.invoke(cli, ["eval", "--bound", "bercu", "--x", "6.5"])
        assert result.exit_code == EXIT_OK
        assert parse_rows_csv(result.stdout)[0]["out_of_validity"] is True

    def test_jsonlines(self, runner):
        result = runner.invoke(cli, ["eval", "--bound", "yang", "--x", "1", "--format", "jsonlines"])
        record = json.loads(result.stdout.splitlines()[0])
        assert list(record) == list(ROW_FIELDS)
        assert record["kind"] == "yang"

    def test_markdown(self, runner):
        result = runner.invoke(cli, ["eval", "--bound", "alzer", "--x", "1.5", "--format", "markdown"])
        lines = result.stdout.splitlines()
        assert lines[0].startswith("| x |")
        assert lines[1].startswith("|---|")
        assert "9.44e-05" in lines[2]

    def test_unknown_bound_is_usage_error(self, runner):
        result = runner.invoke(cli, ["eval", "--bound", "gauss", "--x", "1"])
        assert result.exit_code == EXIT_USAGE
        assert "Unknown bound" in result.output

    def test_negative_x_is_domain_error(self, runner):
        result = runner.invoke(cli, ["eval", "--bound", "polya", "--x", "-1"])
        assert result.exit_code == EXIT_DOMAIN

    def test_missing_option_is_usage_error(self, runner):
        assert runner.invoke(cli, ["eval", "--x", "1"]).exit_code == EXIT_USAGE


class TestTable:
    """Test cases for the table command."""

    def test_published_abscissae(self, runner):
        result = runner.invoke(cli, ["table"])
        assert result.exit_code == EXIT_OK
        assert len(parse_rows_csv(result.stdout)) == 31 * 8

    def test_restricted_columns_on_grid(self, runner):
        result = runner.invoke(cli, ["table", "--grid", "--from", "0", "--to", "1", "--points", "5", "--bound", "eidous"])
        rows = parse_rows_csv(result.stdout)
        assert [r["x"] for r in rows] == [0.0, 0.25, 0.5, 0.75, 1.0]
        assert {r["kind"] for r in rows} == {"eidous"}

    def test_compare(self, runner):
        result = runner.invoke(cli, ["table", "--compare", "--format", "jsonlines"])
        assert result.exit_code == EXIT_OK
        records = [json.loads(line) for line in result.stdout.splitlines()]
        assert len(records) == 31 * 8
        assert not any(r["status"] == "mismatch" for r in records)

    def test_bad_range(self, runner):
        result = runner.invoke(cli, ["table", "--grid", "--from", "5", "--to", "1"])
        assert result.exit_code == EXIT_DOMAIN


class TestAnalysisCommands:
    """Test cases for maxerr, verify, crossover, ratio and series."""

    def test_maxerr(self, runner):
        result = runner.invoke(cli, ["maxerr", "--bound", "eidous", "--format", "jsonlines"])
        assert result.exit_code == EXIT_OK
        record = json.loads(result.stdout)
        assert 5.70e-5 <= abs(record["value"]) <= 5.90e-5
        assert record["bracket_0"] <= record["location"] <= record["bracket_1"]

    def test_maxerr_bad_range(self, runner):
        assert runner.invoke(cli, ["maxerr", "--bound", "eidous", "--from", "5", "--to", "1"]).exit_code == EXIT_DOMAIN

    def test_maxerr_bad_tolerance(self, runner):
        result = runner.invoke(cli, ["maxerr", "--bound", "eidous", "--tol", "0"])
        assert result.exit_code == EXIT_DOMAIN
        assert "Invalid argument" in result.output

    def test_maxerr_non_numeric_tolerance_is_usage_error(self, runner):
        assert runner.invoke(cli, ["maxerr", "--bound", "eidous", "--tol", "tiny"]).exit_code == EXIT_USAGE

    def test_verify_passes(self, runner):
        result = runner.invoke(cli, ["verify", "--bound", "eidous", "--points", "100000", "--format", "jsonlines"])
        assert result.exit_code == EXIT_OK
        record = json.loads(result.stdout)
        assert record["passed"] is True
        assert record["grid_count"] == 100000

    def test_verify_negative_slack(self, runner):
        result = runner.invoke(cli, ["verify", "--bound", "eidous", "--points", "100", "--slack", "-1e-3"])
        assert result.exit_code == EXIT_DOMAIN

    def test_verify_too_few_points(self, runner):
        assert runner.invoke(cli, ["verify", "--bound", "eidous", "--points", "1"]).exit_code == EXIT_DOMAIN

    def test_verify_fails_for_the_approximation(self, runner):
        result = runner.invoke(cli, ["verify", "--bound", "eidous_star", "--points", "100000"])
        assert result.exit_code == EXIT_FAILED

    def test_crossover(self, runner):
        result = runner.invoke(cli, ["crossover", "--format", "jsonlines"])
        record = json.loads(result.stdout)
        assert record["exact"] == pytest.approx(4.7372, abs=1e-3)
        assert record["printed_consistent"] is False

    def test_ratio(self, runner):
        result = runner.invoke(cli, ["ratio", "--format", "jsonlines"])
        record = json.loads(result.stdout)
        assert 1.75 <= record["ratio"] <= 1.90

    def test_series(self, runner):
        result = runner.invoke(cli, ["series", "--graph", "hprime", "--from", "0", "--to", "5", "--points", "11"])
        lines = result.stdout.splitlines()
        assert lines[0] == "x,value"
        assert len(lines) == 12
        assert lines[1] == "0,0"

    def test_series_unknown_graph(self, runner):
        assert runner.invoke(cli, ["series", "--graph", "hdoubleprime"]).exit_code == EXIT_USAGE


class TestRun:
    """Test cases for the programmatic entry point."""

    def test_exit_codes(self):
        assert run(["eval", "--bound", "polya", "--x", "1"]) == EXIT_OK
        assert run(["eval", "--bound", "gauss", "--x", "1"]) == EXIT_USAGE
        assert run(["eval", "--bound", "polya", "--x", "-1"]) == EXIT_DOMAIN
        assert run(["verify", "--bound", "eidous_star", "--points", "10000"]) == EXIT_FAILED
        assert run(["maxerr", "--bound", "eidous", "--tol", "-1"]) == EXIT_DOMAIN

    def test_output_is_deterministic(self, runner):
        args = ["table", "--grid", "--from", "0", "--to", "10", "--points", "101"]
        first = runner.invoke(cli, args).stdout
        second = runner.invoke(cli, args).stdout
        assert first == second

    def test_csv_round_trip_is_lossless(self, runner):
        from analysis import scan_errors

        result = runner.invoke(cli, ["table", "--grid", "--from", "0", "--to", "4", "--points", "9", "--bound", "polya"])
        parsed = parse_rows_csv(result.stdout)
        rows = scan_errors("polya", [r["x"] for r in parsed])
        assert [p["error"] for p in parsed] == [r.error for r in rows]
