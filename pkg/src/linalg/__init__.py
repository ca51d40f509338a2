"""Spectral queries on tridiagonal matrices."""

from .householder import householder_tridiagonalize
from .sturm import (
    all_eigenvalues,
    count_below,
    counting_function,
    counting_function_many,
    kth_eigenvalue,
)
from .tridiagonal import ScaleTag, TridiagonalMatrix, rescale

__all__ = [
    "ScaleTag",
    "TridiagonalMatrix",
    "rescale",
    "householder_tridiagonalize",
    "count_below",
    "counting_function",
    "counting_function_many",
    "kth_eigenvalue",
    "all_eigenvalues",
]
