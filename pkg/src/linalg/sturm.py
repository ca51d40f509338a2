"""Sturm-sequence eigenvalue counting and bisection on tridiagonal matrices.

The count of eigenvalues below y is the number of negative pivots in the
LDL^T factorization of T - yI. Pivots smaller in magnitude than
``pivmin`` are replaced by ``+pivmin``, so an eigenvalue equal to y is never
counted below it and belongs to the closed interval [y, inf).
"""

import numba
import numpy as np

from ..exceptions import IndexOutOfRangeError
from ..utils.logging import get_logger
from .tridiagonal import TridiagonalMatrix

logger = get_logger(__name__)


@numba.jit(nopython=True, cache=True)
def _negative_pivots(diag, off_sq, y, pivmin):
    """Number of negative LDL^T pivots of T - yI."""
    count = 0
    d = diag[0] - y
    if abs(d) < pivmin:
        d = pivmin
    if d < 0.0:
        count += 1
    for k in range(1, diag.shape[0]):
        d = (diag[k] - y) - off_sq[k - 1] / d
        if abs(d) < pivmin:
            d = pivmin
        if d < 0.0:
            count += 1
    return count


@numba.jit(nopython=True, cache=True)
def _bisect(diag, off_sq, pivmin, i, lo, hi, tol):
    """Shrink [lo, hi] keeping count(lo) < i <= count(hi) until width <= tol."""
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if _negative_pivots(diag, off_sq, mid, pivmin) >= i:
            hi = mid
        else:
            lo = mid
    return lo, hi


@numba.jit(nopython=True, cache=True)
def _bisect_all(diag, off_sq, pivmin, lo, hi, tol):
    n = diag.shape[0]
    out = np.empty(n)
    left = lo
    for i in range(1, n + 1):
        a, b = _bisect(diag, off_sq, pivmin, i, left, hi, tol)
        out[i - 1] = b
        # count(a) < i, so a is a valid left end for every later index
        left = a
    return out


def _bracket(T: TridiagonalMatrix):
    """Gershgorin interval padded so the count is 0 at lo and n at hi."""
    lo, hi = T.gershgorin
    pad = 2.0 * T.tolerance + 2.0 * T.n * T.pivmin
    return lo - pad, hi + pad


def count_below(T: TridiagonalMatrix, y: float) -> int:
    """Number of eigenvalues of T strictly less than y."""
    return int(_negative_pivots(T.diag, T.off_sq, float(y), T.pivmin))


def counting_function(T: TridiagonalMatrix, y: float) -> int:
    """N_[y, inf)(T): eigenvalues at or above y."""
    return T.n - count_below(T, y)


def counting_function_many(T: TridiagonalMatrix, ys) -> np.ndarray:
    """counting_function at each threshold in ``ys``."""
    ys = np.asarray(ys, dtype=np.float64)
    counts = np.empty(ys.shape, dtype=np.int64)
    for idx, y in np.ndenumerate(ys):
        counts[idx] = counting_function(T, y)
    return counts


def kth_eigenvalue(T: TridiagonalMatrix, i: int) -> float:
    """The i-th smallest eigenvalue (1-based) by bisection on count_below.

    Returns the upper end of the final bracket, so ``count_below(T, y) >= i``
    holds exactly when the result is at most y, for any y outside that bracket.

    Raises:
        IndexOutOfRangeError: If i is not in [1, n].
    """
    if not 1 <= i <= T.n:
        raise IndexOutOfRangeError(i, T.n)
    lo, hi = _bracket(T)
    _, value = _bisect(T.diag, T.off_sq, T.pivmin, int(i), lo, hi, T.tolerance)
    return float(value)


def all_eigenvalues(T: TridiagonalMatrix) -> np.ndarray:
    """Full spectrum in nondecreasing order, one bisection per index."""
    lo, hi = _bracket(T)
    values = _bisect_all(T.diag, T.off_sq, T.pivmin, lo, hi, T.tolerance)
    return np.maximum.accumulate(values)
