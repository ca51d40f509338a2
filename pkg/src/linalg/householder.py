"""Householder reduction of dense Wigner samples to tridiagonal form."""

import numpy as np
from scipy.linalg import get_lapack_funcs

from ..exceptions import NumericError
from ..utils.logging import get_logger
from .tridiagonal import ScaleTag, TridiagonalMatrix

logger = get_logger(__name__)


def _lapack_reduce(a: np.ndarray):
    """Run ?sytrd (real) or ?hetrd (complex) on the lower triangle of ``a``."""
    if np.iscomplexobj(a):
        names = ("hetrd", "hetrd_lwork")
    else:
        names = ("sytrd", "sytrd_lwork")
    reduce, query = get_lapack_funcs(names, (a,))

    work, info = query(a.shape[0], lower=1)
    if info != 0:
        raise NumericError("Workspace query failed", {"routine": names[1], "info": int(info)})
    lwork = max(1, int(np.real(work)))

    _, d, e, _, info = reduce(a, lwork=lwork, lower=1)
    if info != 0:
        raise NumericError("Tridiagonal reduction failed", {"routine": names[0], "info": int(info)})
    return d, e


def householder_tridiagonalize(sample) -> TridiagonalMatrix:
    """
    Reduce a Hermitian or real symmetric sample to a similar real tridiagonal matrix.

    Args:
        sample: A WignerSample (or a square array) at the raw M_n scale.

    Returns:
        TridiagonalMatrix with scale tag Mn and the same spectrum.

    Raises:
        NumericError: If the input has non-finite entries or LAPACK reports failure.
    """
    entries = getattr(sample, "entries", sample)
    a = np.asarray(entries)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NumericError("Expected a square matrix", {"shape": a.shape})
    if not np.all(np.isfinite(a)):
        raise NumericError("Matrix has non-finite entries")

    n = a.shape[0]
    if n == 1:
        return TridiagonalMatrix(np.real(a[0]).astype(np.float64), np.empty(0), ScaleTag.MN)

    if np.iscomplexobj(a):
        a = np.array(a, dtype=np.complex128, order="F")
    else:
        a = np.array(a, dtype=np.float64, order="F")

    d, e = _lapack_reduce(a)
    kind = "complex" if np.iscomplexobj(a) else "real"
    logger.debug(f"Reduced {n}x{n} {kind} matrix")
    return TridiagonalMatrix(np.real(d), np.real(e), ScaleTag.MN)
