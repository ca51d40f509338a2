"""Dense and tridiagonal samplers at the raw M_n scale."""

import math
from dataclasses import dataclass

import numpy as np

from ..exceptions import ParameterError, SizeError
from ..linalg.tridiagonal import ScaleTag, TridiagonalMatrix
from .specs import EnsembleSpec


@dataclass(frozen=True, eq=False)
class WignerSample:
    """A dense Hermitian (or real symmetric) n x n sample."""
    n: int
    entries: np.ndarray
    spec: EnsembleSpec


def _check_size(n: int) -> None:
    if int(n) != n or n < 1:
        raise ParameterError("n", n, "matrix size must be a positive integer")


def sample_dense(spec: EnsembleSpec, n: int, rng: np.random.Generator) -> WignerSample:
    """
    Draw an n x n Wigner matrix from ``spec``.

    Entries above the diagonal are i.i.d. from ``spec.off_diagonal``, the
    diagonal is i.i.d. from ``spec.diagonal`` and the lower triangle is the
    conjugate transpose of the upper one.
    """
    _check_size(n)
    dtype = np.complex128 if spec.is_complex else np.float64

    upper = np.zeros((n, n), dtype=dtype)
    rows, cols = np.triu_indices(n, k=1)
    upper[rows, cols] = spec.off_diagonal.draw(rng, rows.size)

    entries = upper + upper.conj().T
    entries[np.diag_indices(n)] = spec.diagonal.draw(rng, n)
    return WignerSample(n=n, entries=entries, spec=spec)


def sample_beta_hermite(beta: float, n: int, rng: np.random.Generator) -> TridiagonalMatrix:
    """
    Tridiagonal beta-Hermite model at the M_n scale (right edge near 2*sqrt(n)).

    The diagonal is N(0, 2/beta) and the k-th off-diagonal entry is
    chi_{beta(n-k)} / sqrt(beta). beta = 1 and 2 give the GOE and GUE
    spectra, beta = 4 the GSE.
    """
    if not beta > 0:
        raise ParameterError("beta", beta, "beta must be positive")
    _check_size(n)

    diag = rng.normal(0.0, math.sqrt(2.0 / beta), n)
    if n == 1:
        return TridiagonalMatrix(diag, np.empty(0), ScaleTag.MN)
    dof = beta * np.arange(n - 1, 0, -1, dtype=np.float64)
    offdiag = np.sqrt(rng.chisquare(dof) / beta)
    return TridiagonalMatrix(diag, offdiag, ScaleTag.MN)


def sample_tridiagonal_gaussian(beta: int, n: int, rng: np.random.Generator) -> TridiagonalMatrix:
    """Fast path for GOE (beta=1) and GUE (beta=2) with the dense eigenvalue law.

    Raises:
        ParameterError: If beta is not 1 or 2.
    """
    if beta not in (1, 2):
        raise ParameterError("beta", beta, "tridiagonal Gaussian sampler supports beta 1 or 2")
    return sample_beta_hermite(float(beta), n, rng)


def principal_submatrix(sample: WignerSample) -> WignerSample:
    """Top-left (n-1) x (n-1) block of ``sample``."""
    if sample.n < 2:
        raise SizeError("principal_submatrix", sample.n, 2)
    block = np.array(sample.entries[:-1, :-1], copy=True)
    return WignerSample(n=sample.n - 1, entries=block, spec=sample.spec)
