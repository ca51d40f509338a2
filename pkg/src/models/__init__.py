"""Models package for experiment configuration and reports."""

from .configs import (
    BulkIndexQuery,
    EdgeIndexQuery,
    EdgeWindowQuery,
    EnsembleName,
    ExperimentConfig,
    ExperimentKind,
    Query,
)
from .schemas import CheckResult, ExperimentReport, MomentSummary, TailCell

__all__ = [
    "ExperimentKind",
    "EnsembleName",
    "EdgeWindowQuery",
    "EdgeIndexQuery",
    "BulkIndexQuery",
    "Query",
    "ExperimentConfig",
    "MomentSummary",
    "TailCell",
    "CheckResult",
    "ExperimentReport",
]
