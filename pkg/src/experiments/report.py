"""Persistence of experiment reports: per-replicate CSV and summary JSON."""

import json
from pathlib import Path
from typing import Dict

import pandas as pd

from ..exceptions import ConfigurationError
from ..models.schemas import ExperimentReport
from ..utils.logging import get_logger
from .base import CSV_COLUMNS

logger = get_logger(__name__)

REPLICATES_FILE = "replicates.csv"
SUMMARY_FILE = "summary.json"
CONFIG_FILE = "config.json"


def write_report(report: ExperimentReport, directory: Path) -> Dict[str, Path]:
    """
    Write ``<directory>/<experiment_id>/{replicates.csv, summary.json, config.json}``.

    Args:
        report: Finished experiment report
        directory: Output root

    Returns:
        Mapping of file role to written path.

    Raises:
        ConfigurationError: If the files cannot be written.
    """
    target = Path(directory) / report.experiment_id
    paths = {
        "replicates": target / REPLICATES_FILE,
        "summary": target / SUMMARY_FILE,
        "config": target / CONFIG_FILE,
    }
    frame = report.replicates if report.replicates is not None else pd.DataFrame(columns=CSV_COLUMNS)

    try:
        target.mkdir(parents=True, exist_ok=True)
        frame.to_csv(paths["replicates"], columns=CSV_COLUMNS, index=False, lineterminator="\n")
        paths["summary"].write_text(
            json.dumps(report.summary_dict(), indent=2), encoding="utf-8"
        )
        paths["config"].write_text(
            json.dumps(report.config.model_dump(mode="json"), indent=2), encoding="utf-8"
        )
    except (OSError, ValueError) as e:
        raise ConfigurationError(f"Cannot write report to {target}: {e}", {"path": str(target)}) from e

    logger.info(f"Wrote {len(frame)} replicate rows to {paths['replicates']}")
    return paths


def read_replicates(path: Path) -> pd.DataFrame:
    """Load a replicates CSV written by write_report."""
    try:
        return pd.read_csv(path)
    except (OSError, pd.errors.ParserError) as e:
        raise ConfigurationError(f"Cannot read replicates from {path}: {e}", {"path": str(path)}) from e


def read_summary(path: Path) -> dict:
    """Load a summary JSON written by write_report."""
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigurationError(f"Cannot read summary from {path}: {e}", {"path": str(path)}) from e
