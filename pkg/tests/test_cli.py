"""Tests for the command-line interface."""

import json
import time
from unittest.mock import Mock, patch

import pytest

from main import EXIT_FALSIFIED, EXIT_RESOURCE, EXIT_USAGE, cli


@pytest.mark.integration
class TestBoundsCommand:
    """Test cases for `bounds`."""

    def test_json(self, runner):
        result = runner.invoke(cli, ["bounds", "--n", "100", "--q", "2", "--json"])
        assert result.exit_code == 0
        report = json.loads(result.output)
        assert report["upper"] == 51
        assert report["lower_int"] == 29
        assert report["p"] == "1/2"

    def test_table_shows_exact_value(self, runner):
        result = runner.invoke(cli, ["bounds", "--n", "4", "--q", "2"])
        assert result.exit_code == 0
        assert "exact value" in result.output
        exact_line = next(line for line in result.output.splitlines() if line.startswith("exact value"))
        assert exact_line.split()[-1] == "3"

    def test_table_without_exact_value(self, runner):
        result = runner.invoke(cli, ["bounds", "--n", "3", "--q", "3"])
        assert result.exit_code == 0
        assert "exact value" not in result.output
        assert "volume lower bound" in result.output

    def test_invalid_n(self, runner):
        result = runner.invoke(cli, ["bounds", "--n", "0", "--q", "2"])
        assert result.exit_code == EXIT_USAGE

    def test_json_is_byte_identical(self, runner):
        args = ["bounds", "--n", "200", "--q", "3", "--json"]
        assert runner.invoke(cli, args).output == runner.invoke(cli, args).output

    def test_table_large_n(self, runner):
        started = time.monotonic()
        result = runner.invoke(cli, ["bounds", "--n", "20000", "--q", "2"])
        assert result.exit_code == 0
        assert "volume lower bound" in result.output
        assert time.monotonic() - started < 10.0


@pytest.mark.integration
class TestConstructCommand:
    """Test cases for `construct`."""

    def test_analytic(self, runner):
        result = runner.invoke(cli, ["construct", "--n", "7", "--q", "3", "--verify", "analytic"])
        assert result.exit_code == 0
        report = json.loads(result.output)
        assert report["plan"]["length"] == 6
        assert report["plan"]["thresholds"] == [2, 3, 4]
        assert report["uncovered"] == 0
        assert report["verified"] is True

    def test_exhaustive(self, runner):
        result = runner.invoke(cli, ["construct", "--n", "4", "--q", "2", "--verify", "exhaustive"])
        assert result.exit_code == 0
        report = json.loads(result.output)
        assert report["plan"]["length"] == 3
        assert report["verified"] is True

    def test_no_verification(self, runner):
        result = runner.invoke(cli, ["construct", "--n", "7", "--q", "3", "--verify", "none"])
        assert result.exit_code == 0
        report = json.loads(result.output)
        assert report["uncovered"] is None
        assert report["verified"] is None

    def test_exhaustive_over_cap(self, runner):
        result = runner.invoke(cli, ["construct", "--n", "100", "--q", "3", "--verify", "exhaustive"])
        assert result.exit_code == EXIT_RESOURCE

    def test_failed_verification(self, runner):
        with patch("main.verify_plan_analytic", return_value=5):
            result = runner.invoke(cli, ["construct", "--n", "7", "--q", "3"])
        assert result.exit_code == EXIT_FALSIFIED


@pytest.mark.integration
class TestExactCommand:
    """Test cases for `exact`."""

    def test_path(self, runner):
        result = runner.invoke(cli, ["exact", "--graph", "path:9"])
        assert result.exit_code == 0
        assert "burning number: 3" in result.output
        witness_line = next(line for line in result.output.splitlines() if line.startswith("witness:"))
        assert len(witness_line.split()) == 4

    def test_hamming_json(self, runner):
        result = runner.invoke(cli, ["exact", "--graph", "hamming:3,3", "--json"])
        assert result.exit_code == 0
        report = json.loads(result.output)
        assert report["burning_number"] == 4
        assert len(report["witness"]) == 4
        assert report["vertex_count"] == 27
        assert report["sqrt_bound"] == 6

    def test_limit(self, runner):
        result = runner.invoke(cli, ["exact", "--graph", "path:9", "--limit", "2"])
        assert result.exit_code == 0
        assert "burning number: > 2" in result.output

    def test_file(self, runner, edge_list_file):
        result = runner.invoke(cli, ["exact", "--graph", f"file:{edge_list_file}", "--json"])
        assert result.exit_code == 0
        assert json.loads(result.output)["burning_number"] == 3

    def test_missing_file(self, runner):
        result = runner.invoke(cli, ["exact", "--graph", "file:missing.txt"])
        assert result.exit_code == EXIT_USAGE

    def test_bad_spec(self, runner):
        result = runner.invoke(cli, ["exact", "--graph", "hamming:3,x"])
        assert result.exit_code == EXIT_USAGE
        assert "position 10" in result.output

    def test_disconnected(self, runner, tmp_path):
        path = tmp_path / "split.txt"
        path.write_text("3 1\n0 1\n", encoding="utf-8")
        result = runner.invoke(cli, ["exact", "--graph", f"file:{path}"])
        assert result.exit_code == EXIT_USAGE

    def test_over_vertex_cap(self, runner):
        result = runner.invoke(cli, ["exact", "--graph", "hamming:4,3"])
        assert result.exit_code == EXIT_RESOURCE

    def test_invalid_utf8_file(self, runner, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_bytes(b"2 1\n0 1 # \xff\xfe\n")
        result = runner.invoke(cli, ["exact", "--graph", f"file:{path}"])
        assert result.exit_code == EXIT_USAGE
        assert "UTF-8" in result.output

    def test_non_ascii_digit(self, runner):
        result = runner.invoke(cli, ["exact", "--graph", "path:²"])
        assert result.exit_code == EXIT_USAGE
        assert "position 5" in result.output

    def test_complete_over_vertex_cap(self, runner):
        build = Mock()
        with patch.dict("src.parsers.graph_spec._FAMILIES", {"complete": build}):
            result = runner.invoke(cli, ["exact", "--graph", "complete:3000"])
        assert result.exit_code == EXIT_RESOURCE
        build.assert_not_called()

    def test_edge_list_header_over_vertex_cap(self, runner, tmp_path):
        path = tmp_path / "huge.txt"
        path.write_text("1000000000 0\n", encoding="utf-8")
        result = runner.invoke(cli, ["exact", "--graph", f"file:{path}"])
        assert result.exit_code == EXIT_RESOURCE

    def test_time_budget_allows_graphs_above_solver_cap(self, runner):
        result = runner.invoke(cli, ["exact", "--graph", "path:100", "--time-budget", "30"])
        assert result.exit_code == 0
        assert "burning number: 10" in result.output

    def test_witness_rechecked(self, runner):
        with patch("main.verify_schedule", return_value=False):
            result = runner.invoke(cli, ["exact", "--graph", "path:4"])
        assert result.exit_code == EXIT_FALSIFIED

    def test_parallel_and_sequential_identical(self, runner):
        sequential = runner.invoke(cli, ["exact", "--graph", "hamming:3,3", "--sequential"])
        parallel = runner.invoke(cli, ["exact", "--graph", "hamming:3,3", "--workers", "2"])
        assert sequential.exit_code == parallel.exit_code == 0
        assert sequential.output == parallel.output


@pytest.mark.integration
class TestSweepAndExport:
    """Test cases for `sweep` and `export`."""

    def test_sweep_json_lines(self, runner):
        result = runner.invoke(cli, ["sweep", "--q", "2", "--n-min", "1", "--n-max", "5", "--json"])
        assert result.exit_code == 0
        reports = [json.loads(line) for line in result.output.splitlines()]
        assert [r["n"] for r in reports] == [1, 2, 3, 4, 5]
        assert all(r["alon_exact"] == r["upper"] for r in reports)

    def test_sweep_text(self, runner):
        result = runner.invoke(cli, ["sweep", "--q", "3", "--n-max", "3"])
        assert result.exit_code == 0
        assert len(result.output.splitlines()) == 3

    def test_sweep_empty_range(self, runner):
        result = runner.invoke(cli, ["sweep", "--q", "2", "--n-min", "5", "--n-max", "2"])
        assert result.exit_code == EXIT_USAGE

    def test_export(self, runner):
        result = runner.invoke(cli, ["export", "--graph", "path:3"])
        assert result.exit_code == 0
        assert result.output == "3 2\n0 1\n1 2\n"

    def test_export_over_materialize_cap(self, runner):
        result = runner.invoke(cli, ["export", "--graph", "complete:100000"])
        assert result.exit_code == EXIT_RESOURCE

    def test_export_hamming(self, runner):
        result = runner.invoke(cli, ["export", "--graph", "hamming:2,2"])
        assert result.output.splitlines()[0] == "4 4"
