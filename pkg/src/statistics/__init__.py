"""Standardized statistics, streaming moments, KS distances and tail diagnostics."""

from .distribution import ks_critical_value, ks_distance, ks_two_sample
from .moments import MomentAccumulator, accumulate, merge, merge_all
from .standardize import (
    StandardizedStat,
    StatKind,
    standardize_bulk_eigenvalue,
    standardize_counting_edge,
    standardize_edge_eigenvalue,
)
from .tails import (
    TailEstimate,
    TailProbe,
    clopper_pearson,
    mdp_diagnostic,
    rate_function,
    tail_estimate,
)

__all__ = [
    "StandardizedStat",
    "StatKind",
    "standardize_counting_edge",
    "standardize_bulk_eigenvalue",
    "standardize_edge_eigenvalue",
    "MomentAccumulator",
    "accumulate",
    "merge",
    "merge_all",
    "ks_distance",
    "ks_two_sample",
    "ks_critical_value",
    "TailEstimate",
    "TailProbe",
    "clopper_pearson",
    "tail_estimate",
    "mdp_diagnostic",
    "rate_function",
]
