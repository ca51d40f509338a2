"""Experiment configuration loader with multiple sources.

Sources are merged in the order they are added: a JSON config file, then
environment overrides (``EDGELAB_EXP_*``), then explicit overrides such as
CLI options. The merged dictionary is validated into an ExperimentConfig.
"""

import json
import os
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import ValidationError

from ..exceptions import ConfigurationError
from ..models.configs import ExperimentConfig
from ..utils.logging import get_logger

logger = get_logger(__name__)

ENV_PREFIX = "EDGELAB_EXP_"


class ConfigSource(ABC):
    """Abstract base class for configuration sources."""

    @abstractmethod
    def load(self) -> Dict[str, Any]:
        """Load configuration from source."""
        pass

    @abstractmethod
    def exists(self) -> bool:
        """Check if source exists."""
        pass


class JSONConfigSource(ConfigSource):
    """JSON file configuration source.

    With ``required=True`` a missing or malformed file is an error instead
    of an empty contribution.
    """

    def __init__(self, path: Path, required: bool = False):
        self.path = Path(path)
        self.required = required

    def load(self) -> Dict[str, Any]:
        try:
            with open(self.path, encoding="utf-8") as f:
                data = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            if self.required:
                raise ConfigurationError(
                    f"Cannot read config file {self.path}: {e}", {"path": str(self.path)}
                ) from e
            logger.error(f"Failed to load JSON config from {self.path}: {e}")
            return {}

        if not isinstance(data, dict):
            raise ConfigurationError(
                f"Config file {self.path} must contain a JSON object",
                {"path": str(self.path)},
            )
        return data

    def exists(self) -> bool:
        if self.required and not self.path.exists():
            raise ConfigurationError(f"Config file not found: {self.path}", {"path": str(self.path)})
        return self.path.exists()


class EnvironmentConfigSource(ConfigSource):
    """Environment variables configuration source.

    ``EDGELAB_EXP_REPLICATIONS=500`` sets ``replications``; a double
    underscore nests, e.g. ``EDGELAB_EXP_QUERY__ALPHA=0.5``.
    """

    def __init__(self, prefix: str = ENV_PREFIX):
        self.prefix = prefix

    def load(self) -> Dict[str, Any]:
        config: Dict[str, Any] = {}
        for key, value in os.environ.items():
            if key.startswith(self.prefix):
                config_key = key[len(self.prefix):].lower()
                self._set_nested(config, config_key.split("__"), self._parse_value(value))
        return config

    def exists(self) -> bool:
        """Environment always exists."""
        return True

    def _parse_value(self, value: str) -> Any:
        """JSON scalars and lists parse as such, anything else stays a string."""
        try:
            return json.loads(value)
        except json.JSONDecodeError:
            return value

    def _set_nested(self, config: Dict[str, Any], parts: List[str], value: Any) -> None:
        current = config
        for part in parts[:-1]:
            current = current.setdefault(part, {})
        current[parts[-1]] = value


class DictConfigSource(ConfigSource):
    """In-memory overrides; keys whose value is None are ignored."""

    def __init__(self, values: Dict[str, Any]):
        self.values = {k: v for k, v in values.items() if v is not None}

    def load(self) -> Dict[str, Any]:
        return dict(self.values)

    def exists(self) -> bool:
        return bool(self.values)


class ConfigLoader:
    """Configuration loader that merges multiple sources."""

    def __init__(self):
        self.sources: List[ConfigSource] = []
        self._config: Optional[Dict[str, Any]] = None

    def add_source(self, source: ConfigSource) -> "ConfigLoader":
        self.sources.append(source)
        return self

    def add_json_file(self, path: Path, required: bool = False) -> "ConfigLoader":
        return self.add_source(JSONConfigSource(path, required=required))

    def add_environment(self, prefix: str = ENV_PREFIX) -> "ConfigLoader":
        return self.add_source(EnvironmentConfigSource(prefix))

    def add_overrides(self, **overrides: Any) -> "ConfigLoader":
        return self.add_source(DictConfigSource(overrides))

    def load(self, reload: bool = False) -> Dict[str, Any]:
        """Load and merge configuration from all sources."""
        if self._config is not None and not reload:
            return self._config

        config: Dict[str, Any] = {}
        for source in self.sources:
            if source.exists():
                source_config = source.load()
                if source_config:
                    config = self._deep_merge(config, source_config)
                    logger.debug(f"Loaded config from {source.__class__.__name__}")

        self._config = config
        return config

    def _deep_merge(self, base: Dict[str, Any], update: Dict[str, Any]) -> Dict[str, Any]:
        result = base.copy()
        for key, value in update.items():
            if key in result and isinstance(result[key], dict) and isinstance(value, dict):
                result[key] = self._deep_merge(result[key], value)
            else:
                result[key] = value
        return result

    def build(self) -> ExperimentConfig:
        """Validate the merged configuration.

        Raises:
            ConfigurationError: If the merged values do not form a valid config.
        """
        data = self.load()
        try:
            return ExperimentConfig.model_validate(data)
        except ValidationError as e:
            raise ConfigurationError(
                f"Invalid experiment configuration: {e.error_count()} error(s)",
                {"errors": e.errors(include_url=False, include_context=False)},
            ) from e

    @classmethod
    def for_experiment(
        cls,
        experiment: str,
        config_path: Optional[Path] = None,
        **overrides: Any,
    ) -> "ConfigLoader":
        """Loader for one experiment: file, then environment, then overrides.

        The experiment kind always comes from the caller, so a config.json
        written by another experiment can be reused as a template.
        """
        loader = cls()
        if config_path is not None:
            loader.add_json_file(config_path, required=True)
        loader.add_environment()
        loader.add_overrides(**overrides)
        loader.add_overrides(experiment=experiment)
        return loader


def read_config(path: Path) -> ExperimentConfig:
    """Read and validate an ExperimentConfig from a JSON file."""
    return ConfigLoader().add_json_file(Path(path), required=True).build()


def write_config(cfg: ExperimentConfig, path: Path) -> Path:
    """Write ``cfg`` as JSON so that read_config returns an equal config."""
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(cfg.model_dump(mode="json"), indent=2), encoding="utf-8")
    except OSError as e:
        raise ConfigurationError(f"Cannot write config to {path}: {e}", {"path": str(path)}) from e
    return path
