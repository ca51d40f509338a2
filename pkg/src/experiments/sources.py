"""Matrix sources and replicate kernels shared by the experiments.

Kernels are module-level functions bound with functools.partial so joblib
can ship them to worker processes.
"""

import math

import numpy as np

from ..ensembles import sample_beta_hermite, sample_dense, sample_tridiagonal_gaussian
from ..linalg import (
    ScaleTag,
    TridiagonalMatrix,
    counting_function,
    householder_tridiagonalize,
    kth_eigenvalue,
    rescale,
)
from ..models.configs import EnsembleName


def draw_matrix(ensemble: EnsembleName, n: int, rng: np.random.Generator) -> TridiagonalMatrix:
    """One sample at the raw M_n scale, tridiagonal either way."""
    if ensemble.is_tridiagonal:
        return sample_tridiagonal_gaussian(ensemble.beta, n, rng)
    return householder_tridiagonalize(sample_dense(ensemble.spec, n, rng))


def draw_normalized(ensemble: EnsembleName, n: int, rng: np.random.Generator) -> TridiagonalMatrix:
    """One sample at the W_n = M_n/sqrt(n) scale."""
    return rescale(draw_matrix(ensemble, n, rng), ScaleTag.WN)


def counting_kernel(ensemble: EnsembleName, n: int, y: float,
                    rng: np.random.Generator, count: int) -> np.ndarray:
    """N_[y, inf)(W_n) per replicate."""
    out = np.empty(count)
    for r in range(count):
        out[r] = counting_function(draw_normalized(ensemble, n, rng), y)
    return out


def eigenvalue_kernel(ensemble: EnsembleName, n: int, index: int,
                      rng: np.random.Generator, count: int) -> np.ndarray:
    """lambda_index(W_n) per replicate (1-based, ascending)."""
    out = np.empty(count)
    for r in range(count):
        out[r] = kth_eigenvalue(draw_normalized(ensemble, n, rng), index)
    return out


def beta_hermite_kernel(beta: float, n: int, index: int,
                        rng: np.random.Generator, count: int) -> np.ndarray:
    """lambda_index of the beta-Hermite model at the W_n scale."""
    out = np.empty(count)
    scale = 1.0 / math.sqrt(n)
    for r in range(count):
        out[r] = kth_eigenvalue(sample_beta_hermite(beta, n, rng), index) * scale
    return out
