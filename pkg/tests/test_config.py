"""Tests for settings, experiment configs and the config loader."""

import json
from pathlib import Path

import pytest
from pydantic import ValidationError

from src.config import ConfigLoader, Settings, get_settings, read_config, write_config
from src.config.loader import DictConfigSource, EnvironmentConfigSource, JSONConfigSource
from src.exceptions import ConfigurationError, DomainError
from src.models import (
    BulkIndexQuery,
    EdgeIndexQuery,
    EdgeWindowQuery,
    EnsembleName,
    ExperimentConfig,
    ExperimentKind,
)


@pytest.mark.unit
class TestSettings:
    """Test environment-driven settings."""

    def test_defaults(self):
        """Defaults for regime guards and blocks."""
        settings = Settings()
        assert settings.block_size == 250
        assert settings.s_min == 4.0
        assert settings.delta == 0.5
        assert settings.threads is None
        assert settings.output_dir == Path("edgelab-out")

    def test_threads_override_workers(self, monkeypatch):
        """EDGELAB_THREADS wins over the requested worker count."""
        monkeypatch.setenv("EDGELAB_THREADS", "3")
        settings = Settings()
        assert settings.resolve_workers(8) == 3
        assert Settings(threads=None).resolve_workers(8) == 8

    def test_invalid_log_level(self):
        """Unknown log levels are rejected."""
        with pytest.raises(ValidationError):
            Settings(log_level="LOUD")

    def test_level_normalized(self):
        """Log levels are upper-cased."""
        assert Settings(log_level="debug").log_level == "DEBUG"

    def test_cached(self):
        """get_settings returns one instance."""
        assert get_settings() is get_settings()


@pytest.mark.unit
class TestExperimentConfig:
    """Test config validation and query resolution."""

    def test_defaults(self):
        """Only the experiment is required."""
        cfg = ExperimentConfig(experiment="duality")
        assert cfg.experiment == ExperimentKind.DUALITY
        assert cfg.ensemble == EnsembleName.TRIDIAG_GUE
        assert cfg.a_grid == [1.25, 1.5]
        assert cfg.x_grid == [-1.0, 1.0]

    def test_unknown_field(self):
        """Extra keys are rejected."""
        with pytest.raises(ValidationError):
            ExperimentConfig(experiment="duality", replicates=5)

    @pytest.mark.parametrize("field,value", [
        ("n", 3), ("replications", 0), ("seed", -1), ("seed", 2 ** 64),
        ("a_grid", [0.5]), ("x_grid", [0.0]), ("workers", 0),
    ])
    def test_invalid_values(self, field, value):
        """Field constraints are enforced."""
        with pytest.raises(ValidationError):
            ExperimentConfig(experiment="duality", **{field: value})

    def test_query_discriminator(self):
        """Queries are parsed by their kind."""
        cfg = ExperimentConfig(experiment="eigenvalue-clt", query={"kind": "bulk_index", "fraction": 0.25})
        assert isinstance(cfg.query, BulkIndexQuery)
        assert cfg.query.resolve(100) == 25

    def test_edge_window_query(self):
        """Exactly one window parameter; default s = sqrt(n)."""
        assert EdgeWindowQuery().resolve(400).s == pytest.approx(20.0)
        assert EdgeWindowQuery(s=10.0).resolve(400).s == pytest.approx(10.0)
        assert EdgeWindowQuery(y=1.5).resolve(400).y == 1.5
        with pytest.raises(ValidationError):
            EdgeWindowQuery(s=10.0, y=1.5)

    def test_edge_window_query_domain(self):
        """Resolving outside the edge region raises DomainError."""
        with pytest.raises(DomainError):
            EdgeWindowQuery(y=-1.9).resolve(100)

    def test_edge_index_query(self):
        """alpha or i, not both; default alpha 0.6."""
        assert EdgeIndexQuery().resolve(1000).i == 63
        assert EdgeIndexQuery(i=7).resolve(1000).i == 7
        with pytest.raises(ValidationError):
            EdgeIndexQuery(alpha=0.5, i=3)

    def test_ensemble_properties(self):
        """Fast paths reuse the Gaussian specs."""
        assert EnsembleName.TRIDIAG_GOE.is_tridiagonal
        assert EnsembleName.TRIDIAG_GOE.beta == 1
        assert EnsembleName.MATCHED.spec.name == "matched"
        assert not EnsembleName.GUE.is_tridiagonal


@pytest.mark.unit
class TestConfigLoader:
    """Test source merging and file round trips."""

    def test_merge_order(self, temp_dir, monkeypatch):
        """File < environment < overrides."""
        path = temp_dir / "cfg.json"
        path.write_text(json.dumps({"n": 64, "replications": 10, "seed": 1}))
        monkeypatch.setenv("EDGELAB_EXP_REPLICATIONS", "20")
        monkeypatch.setenv("EDGELAB_EXP_SEED", "2")
        cfg = ConfigLoader.for_experiment("counting-clt", path, seed=3, n=None).build()
        assert cfg.experiment == ExperimentKind.COUNTING_CLT
        assert cfg.n == 64
        assert cfg.replications == 20
        assert cfg.seed == 3

    def test_experiment_kind_from_caller(self, temp_dir, monkeypatch):
        """File and environment cannot change the experiment kind."""
        path = temp_dir / "config.json"
        path.write_text(json.dumps({"experiment": "counting-clt", "n": 64}))
        monkeypatch.setenv("EDGELAB_EXP_EXPERIMENT", "mdp-probe")
        cfg = ConfigLoader.for_experiment("duality", path).build()
        assert cfg.experiment == ExperimentKind.DUALITY
        assert cfg.n == 64

    def test_nested_environment(self, monkeypatch):
        """Double underscores nest into sub-objects."""
        monkeypatch.setenv("EDGELAB_EXP_QUERY__KIND", "edge_index")
        monkeypatch.setenv("EDGELAB_EXP_QUERY__I", "5")
        assert EnvironmentConfigSource().load() == {"query": {"kind": "edge_index", "i": 5}}

    def test_deep_merge(self):
        """Nested dictionaries merge key by key."""
        loader = ConfigLoader()
        loader.add_overrides(query={"kind": "edge_index", "alpha": 0.5})
        loader.add_source(DictConfigSource({"query": {"alpha": 0.7}}))
        assert loader.load()["query"] == {"kind": "edge_index", "alpha": 0.7}

    def test_missing_required_file(self, temp_dir):
        """A missing --config file is an error."""
        with pytest.raises(ConfigurationError):
            ConfigLoader.for_experiment("duality", temp_dir / "absent.json").build()

    def test_malformed_file(self, temp_dir):
        """Invalid JSON or a non-object is an error."""
        bad = temp_dir / "bad.json"
        bad.write_text("{not json")
        with pytest.raises(ConfigurationError):
            JSONConfigSource(bad, required=True).load()
        bad.write_text("[1, 2]")
        with pytest.raises(ConfigurationError):
            JSONConfigSource(bad).load()

    def test_optional_file_missing(self, temp_dir):
        """An optional missing file contributes nothing."""
        assert JSONConfigSource(temp_dir / "absent.json").load() == {}

    def test_invalid_values_wrapped(self):
        """Schema violations surface as ConfigurationError."""
        with pytest.raises(ConfigurationError) as exc_info:
            ConfigLoader.for_experiment("duality", n=2).build()
        assert exc_info.value.details["errors"]

    def test_roundtrip(self, temp_dir):
        """write_config then read_config returns an equal config."""
        cfg = ExperimentConfig(
            experiment="mdp-probe",
            ensemble="goe",
            n=128,
            seed=2 ** 63 + 5,
            query={"kind": "edge_window", "s": 12.5},
            a_grid=[1.0, 2.0],
            x_grid=[-2.0, 0.5],
            compare_n=64,
            output_dir=temp_dir / "out",
        )
        path = write_config(cfg, temp_dir / "nested" / "cfg.json")
        assert read_config(path) == cfg
