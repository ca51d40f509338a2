"""EdgeLab - Monte Carlo lab for edge fluctuations of random Hermitian matrices."""

__version__ = "0.1.0"

from .ensembles import GOE, GUE, MATCHED, MATCHED_REAL, RADEMACHER, EnsembleSpec, SymmetryClass
from .exceptions import EdgeLabError
from .experiments import run_experiment, write_report
from .linalg import (
    ScaleTag,
    TridiagonalMatrix,
    count_below,
    counting_function,
    householder_tridiagonalize,
    kth_eigenvalue,
)
from .models import ExperimentConfig, ExperimentKind, ExperimentReport

__all__ = [
    # Ensembles
    "EnsembleSpec",
    "SymmetryClass",
    "GUE",
    "GOE",
    "MATCHED",
    "MATCHED_REAL",
    "RADEMACHER",
    # Linear algebra
    "ScaleTag",
    "TridiagonalMatrix",
    "householder_tridiagonalize",
    "count_below",
    "counting_function",
    "kth_eigenvalue",
    # Experiments
    "ExperimentConfig",
    "ExperimentKind",
    "ExperimentReport",
    "run_experiment",
    "write_report",
    # Errors
    "EdgeLabError",
]
