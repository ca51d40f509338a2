"""Pytest configuration and shared fixtures."""

from unittest.mock import MagicMock

import numpy as np
import pytest

from src.config.settings import Settings, get_settings
from src.models import ExperimentConfig, ExperimentKind


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    """Isolate tests from EDGELAB_* variables of the calling shell."""
    import os

    for key in list(os.environ):
        if key.startswith("EDGELAB_"):
            monkeypatch.delenv(key, raising=False)
    monkeypatch.setenv("EDGELAB_LOGFIRE_ENABLED", "false")
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture(autouse=True)
def mock_logfire(monkeypatch):
    """Replace logfire in the span helpers so nothing is configured or sent."""
    mock = MagicMock()
    monkeypatch.setattr("src.utils.logfire_setup.logfire", mock)
    return mock


@pytest.fixture
def rng():
    """Seeded generator for unit tests."""
    return np.random.default_rng(20240611)


@pytest.fixture
def settings():
    """Settings with small replicate blocks so several blocks are exercised."""
    return Settings(block_size=10, logfire_enabled=False)


@pytest.fixture
def make_config():
    """Factory for small experiment configs."""
    def _make(experiment: str, **overrides) -> ExperimentConfig:
        values = {"experiment": ExperimentKind(experiment), "n": 32, "replications": 30, "seed": 7}
        values.update(overrides)
        return ExperimentConfig(**values)

    return _make


@pytest.fixture
def temp_dir(tmp_path):
    """Create a temporary directory for test files."""
    test_dir = tmp_path / "test_files"
    test_dir.mkdir()
    return test_dir


@pytest.fixture
def cli_runner():
    """Create a Click CLI test runner."""
    from click.testing import CliRunner
    return CliRunner()
