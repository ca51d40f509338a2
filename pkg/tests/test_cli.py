"""Tests for CLI commands."""

import json
from unittest.mock import patch

import pytest

from src.cli.main import cli


@pytest.mark.unit
class TestCLIBasics:
    """Test basic CLI functionality."""

    def test_cli_help(self, cli_runner):
        """Help lists every experiment subcommand."""
        result = cli_runner.invoke(cli, ["--help"])
        assert result.exit_code == 0
        for command in ("counting-clt", "eigenvalue-clt", "mdp-probe", "universality",
                        "interlacing", "duality", "show-config", "version"):
            assert command in result.output

    def test_cli_version(self, cli_runner):
        """Test version command."""
        result = cli_runner.invoke(cli, ["--no-logfire", "version"])
        assert result.exit_code == 0
        assert "edgelab" in result.output
        assert "Version:" in result.output

    def test_no_logfire_flag(self, cli_runner, monkeypatch):
        """--no-logfire skips Logfire setup even when enabled in settings."""
        monkeypatch.setenv("EDGELAB_LOGFIRE_ENABLED", "true")
        with patch("src.cli.main.setup_logfire") as mock_setup:
            result = cli_runner.invoke(cli, ["--no-logfire", "version"])
            assert result.exit_code == 0
            mock_setup.assert_not_called()

    def test_logfire_enabled(self, cli_runner, monkeypatch):
        """Logfire is configured when enabled."""
        monkeypatch.setenv("EDGELAB_LOGFIRE_ENABLED", "true")
        with patch("src.cli.main.setup_logfire") as mock_setup:
            result = cli_runner.invoke(cli, ["version"])
            assert result.exit_code == 0
            mock_setup.assert_called_once()

    def test_experiment_help_lists_options(self, cli_runner):
        """Experiment subcommands share their options."""
        result = cli_runner.invoke(cli, ["duality", "--help"])
        assert result.exit_code == 0
        for option in ("--config", "--n", "--reps", "--seed", "--workers", "--ensemble", "--out"):
            assert option in result.output


@pytest.mark.unit
class TestShowConfig:
    """Test the merged-config view."""

    def test_overrides_applied(self, cli_runner):
        """Command-line overrides reach the merged config."""
        result = cli_runner.invoke(cli, ["--no-logfire", "show-config", "mdp-probe", "--n", "512",
                                         "--seed", "9", "--ensemble", "goe"])
        assert result.exit_code == 0
        assert '"n": 512' in result.output
        assert '"seed": 9' in result.output
        assert '"goe"' in result.output

    def test_config_file(self, cli_runner, temp_dir):
        """A config file supplies values that options can override."""
        path = temp_dir / "cfg.json"
        path.write_text(json.dumps({"n": 300, "replications": 77}))
        result = cli_runner.invoke(cli, ["--no-logfire", "show-config", "duality",
                                         "--config", str(path), "--reps", "5"])
        assert result.exit_code == 0
        assert '"n": 300' in result.output
        assert '"replications": 5' in result.output

    def test_subcommand_wins_over_file_experiment(self, cli_runner, temp_dir):
        """The experiment named in a reused config.json does not replace the subcommand."""
        path = temp_dir / "config.json"
        path.write_text(json.dumps({"experiment": "counting-clt", "n": 120, "replications": 8}))
        result = cli_runner.invoke(cli, ["--no-logfire", "show-config", "duality", "--config", str(path)])
        assert result.exit_code == 0
        config = json.loads(result.output[result.output.index("{"):])
        assert config["experiment"] == "duality"
        assert config["n"] == 120

    def test_invalid_config(self, cli_runner):
        """Invalid values exit with status 1."""
        result = cli_runner.invoke(cli, ["--no-logfire", "show-config", "duality", "--n", "2"])
        assert result.exit_code == 1
        assert "Error" in result.output

    def test_unknown_ensemble(self, cli_runner):
        """Ensembles outside the preset list are usage errors."""
        result = cli_runner.invoke(cli, ["--no-logfire", "show-config", "duality", "--ensemble", "gse"])
        assert result.exit_code == 2


@pytest.mark.integration
class TestExperimentCommands:
    """Test running experiments from the command line."""

    def test_duality_run(self, cli_runner, temp_dir):
        """A run prints the checks table and writes the report files."""
        result = cli_runner.invoke(cli, ["--no-logfire", "duality", "--n", "20", "--reps", "10",
                                         "--seed", "4", "--out", str(temp_dir)])
        assert result.exit_code == 0, result.output
        assert "Checks" in result.output
        assert "duality_disagreements" in result.output
        runs = list(temp_dir.iterdir())
        assert len(runs) == 1
        assert runs[0].name.startswith("duality-")
        assert {p.name for p in runs[0].iterdir()} == {"replicates.csv", "summary.json", "config.json"}

    def test_domain_error_exit_code(self, cli_runner, temp_dir):
        """An edge window below s_min exits with status 1."""
        result = cli_runner.invoke(cli, ["--no-logfire", "counting-clt", "--n", "8", "--reps", "5",
                                         "--out", str(temp_dir)])
        assert result.exit_code == 1
        assert "Error" in result.output
        assert list(temp_dir.iterdir()) == []

    def test_threads_environment(self, cli_runner, temp_dir, monkeypatch):
        """EDGELAB_THREADS overrides --workers without changing the experiment id."""
        monkeypatch.setenv("EDGELAB_THREADS", "1")
        result = cli_runner.invoke(cli, ["--no-logfire", "duality", "--n", "20", "--reps", "10",
                                         "--workers", "4", "--out", str(temp_dir / "a")])
        assert result.exit_code == 0, result.output
        baseline = cli_runner.invoke(cli, ["--no-logfire", "duality", "--n", "20", "--reps", "10",
                                           "--out", str(temp_dir / "b")])
        assert baseline.exit_code == 0, baseline.output
        (a,) = (temp_dir / "a").iterdir()
        (b,) = (temp_dir / "b").iterdir()
        assert a.name == b.name
        assert (a / "replicates.csv").read_bytes() == (b / "replicates.csv").read_bytes()
