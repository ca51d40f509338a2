"""Kolmogorov-Smirnov distances against N(0, 1) and between samples."""

import math
from typing import Callable, Optional, Tuple

import numpy as np
from scipy import special, stats

from ..exceptions import EmptySampleError, ParameterError


def ks_distance(sample, reference: Callable = special.ndtr) -> float:
    """Sup-distance between the empirical CDF of ``sample`` and ``reference``.

    ``reference`` defaults to the standard normal CDF.
    """
    data = np.sort(np.asarray(sample, dtype=np.float64).ravel())
    n = data.size
    if n == 0:
        raise EmptySampleError("ks_distance")
    cdf = np.asarray(reference(data), dtype=np.float64)
    ranks = np.arange(1, n + 1, dtype=np.float64)
    above = np.max(ranks / n - cdf)
    below = np.max(cdf - (ranks - 1.0) / n)
    return float(max(above, below))


def ks_two_sample(a, b) -> Tuple[float, float]:
    """Two-sample KS distance and asymptotic-or-exact p-value."""
    a = np.asarray(a, dtype=np.float64).ravel()
    b = np.asarray(b, dtype=np.float64).ravel()
    if a.size == 0 or b.size == 0:
        raise EmptySampleError("ks_two_sample")
    result = stats.ks_2samp(a, b)
    return float(result.statistic), float(result.pvalue)


def ks_critical_value(n: int, m: Optional[int] = None, level: float = 0.01) -> float:
    """
    Asymptotic KS critical value at significance ``level``.

    One-sample when ``m`` is None (about 1.63/sqrt(n) at level 0.01),
    two-sample with effective size nm/(n+m) otherwise.
    """
    if not 0.0 < level < 1.0:
        raise ParameterError("level", level, "significance level must lie in (0, 1)")
    if n < 1 or (m is not None and m < 1):
        raise EmptySampleError("ks_critical_value")
    quantile = float(special.kolmogi(level))
    if m is None:
        return quantile / math.sqrt(n)
    return quantile * math.sqrt((n + m) / (n * m))
