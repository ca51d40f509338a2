"""Shared state and bookkeeping for one experiment run."""

import hashlib
import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import numpy as np
import pandas as pd

from ..config.settings import Settings, get_settings
from ..models.configs import ExperimentConfig
from ..models.schemas import CheckResult, ExperimentReport, MomentSummary, TailCell
from ..statistics.moments import MomentAccumulator, merge_all
from ..utils.logging import get_logger
from .defaults import apply_defaults
from .runner import Kernel, ReplicateTable, plan_blocks, run_replicates

logger = get_logger(__name__)

CSV_COLUMNS = [
    "experiment_id",
    "replicate",
    "n",
    "ensemble",
    "statistic",
    "raw_value",
    "standardized_value",
    "seed_stream",
]


def experiment_id(cfg: ExperimentConfig) -> str:
    """Stable identifier from the config, independent of workers and output_dir."""
    payload = cfg.model_dump(mode="json", exclude={"workers", "output_dir"})
    digest = hashlib.sha256(json.dumps(payload, sort_keys=True).encode("utf-8")).hexdigest()
    return f"{cfg.experiment.value}-{digest[:12]}"


def fold_moments(values: np.ndarray, block_size: int) -> MomentAccumulator:
    """Per-block accumulators merged in block-id order."""
    values = np.asarray(values, dtype=np.float64)
    blocks = plan_blocks(values.size, block_size)
    return merge_all(
        MomentAccumulator.from_values(values[b.start:b.start + b.size]) for b in blocks
    )


@dataclass
class ExperimentContext:
    """Configuration, replicate runner and collected results of one run."""
    cfg: ExperimentConfig
    settings: Settings
    experiment_id: str
    block_size: int
    workers: int
    frames: List[pd.DataFrame] = field(default_factory=list)
    statistics: Dict[str, MomentSummary] = field(default_factory=dict)
    checks: List[CheckResult] = field(default_factory=list)

    @classmethod
    def create(cls, cfg: ExperimentConfig, settings: Optional[Settings] = None) -> "ExperimentContext":
        settings = settings or get_settings()
        cfg = apply_defaults(cfg)
        return cls(
            cfg=cfg,
            settings=settings,
            experiment_id=experiment_id(cfg),
            block_size=cfg.block_size or settings.block_size,
            workers=settings.resolve_workers(cfg.workers),
        )

    def run(self, kernel: Kernel, group: int, replications: Optional[int] = None) -> ReplicateTable:
        return run_replicates(
            kernel,
            replications or self.cfg.replications,
            self.cfg.seed,
            group=group,
            block_size=self.block_size,
            workers=self.workers,
        )

    def record(
        self,
        statistic: str,
        ensemble: str,
        n: int,
        raw: np.ndarray,
        labels: Sequence[str],
        standardized: Optional[np.ndarray] = None,
    ) -> MomentSummary:
        """Add per-replicate CSV rows and the statistic's moments.

        Moments are taken over the standardized values when present.
        """
        raw = np.asarray(raw, dtype=np.float64)
        if standardized is None:
            standardized_col = np.full(raw.size, np.nan)
        else:
            standardized_col = np.asarray(standardized, dtype=np.float64)

        self.frames.append(pd.DataFrame({
            "experiment_id": self.experiment_id,
            "replicate": np.arange(raw.size, dtype=np.int64),
            "n": n,
            "ensemble": ensemble,
            "statistic": statistic,
            "raw_value": raw,
            "standardized_value": standardized_col,
            "seed_stream": list(labels),
        }, columns=CSV_COLUMNS))

        summary = fold_moments(raw if standardized is None else standardized_col,
                               self.block_size).summary()
        self.statistics[statistic] = summary
        return summary

    def check(self, name: str, passed: bool, detail: str = "") -> CheckResult:
        result = CheckResult(name=name, passed=bool(passed), detail=detail)
        self.checks.append(result)
        if not result.passed:
            logger.warning(f"Check {name} failed: {detail}")
        return result

    def check_range(self, name: str, value: Optional[float], lo: float, hi: float) -> CheckResult:
        if value is None or not np.isfinite(value):
            return self.check(name, False, f"undefined value, expected [{lo}, {hi}]")
        return self.check(name, lo <= value <= hi, f"{value:.6g} in [{lo}, {hi}]")

    def check_below(self, name: str, value: Optional[float], bound: float) -> CheckResult:
        if value is None or not np.isfinite(value):
            return self.check(name, False, f"undefined value, expected < {bound}")
        return self.check(name, value < bound, f"{value:.6g} < {bound:.6g}")

    def replicates(self) -> pd.DataFrame:
        if not self.frames:
            return pd.DataFrame(columns=CSV_COLUMNS)
        return pd.concat(self.frames, ignore_index=True)

    def report(
        self,
        primary: str,
        ks: Optional[float] = None,
        tail_probe: Sequence[TailCell] = (),
        metrics: Optional[Dict[str, Any]] = None,
    ) -> ExperimentReport:
        return ExperimentReport(
            experiment_id=self.experiment_id,
            config=self.cfg,
            moments=self.statistics[primary],
            statistics=dict(self.statistics),
            ks=ks,
            tail_probe=list(tail_probe),
            checks=list(self.checks),
            metrics=metrics or {},
            replicates=self.replicates(),
        )
