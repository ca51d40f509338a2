"""Tail probabilities, binomial confidence intervals and MDP diagnostics."""

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, Field
from scipy import stats

from ..exceptions import DomainError, EmptySampleError, ParameterError
from ..models.schemas import TailCell

ZERO_COUNT_FLAG = "zero_count_lower_bound"


class TailEstimate(BaseModel):
    """Exceedance fraction with its Clopper-Pearson interval."""
    p_hat: float = Field(ge=0.0, le=1.0)
    ci_lo: float = Field(ge=0.0, le=1.0)
    ci_hi: float = Field(ge=0.0, le=1.0)
    exceed: int = Field(ge=0)
    total: int = Field(gt=0)
    zero_count: bool = False

    @property
    def ci(self) -> Tuple[float, float]:
        return (self.ci_lo, self.ci_hi)


def clopper_pearson(k: int, n: int, confidence: float = 0.95) -> Tuple[float, float]:
    """Exact binomial interval for k successes out of n."""
    if n <= 0:
        raise EmptySampleError("clopper_pearson")
    alpha = 1.0 - confidence
    lo = 0.0 if k == 0 else float(stats.beta.ppf(alpha / 2.0, k, n - k + 1))
    hi = 1.0 if k == n else float(stats.beta.ppf(1.0 - alpha / 2.0, k + 1, n - k))
    return lo, hi


def _exceedances(scaled: np.ndarray, x: float) -> int:
    if x > 0:
        return int(np.count_nonzero(scaled >= x))
    return int(np.count_nonzero(scaled <= x))


def tail_estimate(values, a_n: float, x: float, confidence: float = 0.95) -> TailEstimate:
    """
    Fraction of values with value/a_n >= x (x > 0) or value/a_n <= x (x < 0).

    A zero count reports the rule-of-three upper bound min(1, 3/total).

    Raises:
        EmptySampleError: If ``values`` is empty.
        ParameterError: If a_n < 1 or x == 0.
    """
    data = np.asarray(values, dtype=np.float64).ravel()
    if data.size == 0:
        raise EmptySampleError("tail_estimate")
    if a_n < 1.0:
        raise ParameterError("a_n", a_n, "speed a_n must be at least 1")
    if x == 0.0:
        raise ParameterError("x", x, "deviation level must be nonzero")

    total = int(data.size)
    exceed = _exceedances(data / a_n, x)
    return _estimate(exceed, total, confidence)


def _estimate(exceed: int, total: int, confidence: float) -> TailEstimate:
    if exceed == 0:
        return TailEstimate(p_hat=0.0, ci_lo=0.0, ci_hi=min(1.0, 3.0 / total),
                            exceed=0, total=total, zero_count=True)
    lo, hi = clopper_pearson(exceed, total, confidence)
    return TailEstimate(p_hat=exceed / total, ci_lo=lo, ci_hi=hi, exceed=exceed, total=total)


def mdp_diagnostic(p_hat: float, a_n: float, ci_upper: Optional[float] = None) -> float:
    """
    -log(p_hat) / a_n^2, compared against the rate function.

    With p_hat = 0 the value comes from ``ci_upper`` and is only a lower bound.

    Raises:
        DomainError: If p_hat is outside [0, 1], or p_hat = 0 without ci_upper.
    """
    if not 0.0 <= p_hat <= 1.0:
        raise DomainError("mdp_diagnostic", f"probability {p_hat} outside [0, 1]")
    if p_hat == 0.0:
        if ci_upper is None or not 0.0 < ci_upper <= 1.0:
            raise DomainError("mdp_diagnostic", "zero probability needs a positive CI upper bound")
        p_hat = ci_upper
    return -math.log(p_hat) / (a_n * a_n)


def rate_function(x: float) -> float:
    """x^2 / 2."""
    return 0.5 * x * x


@dataclass
class TailProbe:
    """Exceedance counts over an (a, x) grid for one sample of a statistic."""
    a_grid: np.ndarray
    x_grid: np.ndarray
    exceed_counts: np.ndarray
    total: int

    def __post_init__(self):
        self.a_grid = np.asarray(self.a_grid, dtype=np.float64)
        self.x_grid = np.asarray(self.x_grid, dtype=np.float64)
        self.exceed_counts = np.asarray(self.exceed_counts, dtype=np.int64)
        _check_grids(self.a_grid, self.x_grid)
        if self.exceed_counts.shape != (self.a_grid.size, self.x_grid.size):
            raise ParameterError("exceed_counts", self.exceed_counts.shape,
                                 "exceedance matrix must be len(a_grid) x len(x_grid)")
        if np.any(self.exceed_counts < 0) or np.any(self.exceed_counts > self.total):
            raise ParameterError("exceed_counts", None, "counts must lie in [0, total]")

    @classmethod
    def from_values(cls, values, a_grid: Sequence[float], x_grid: Sequence[float]) -> "TailProbe":
        data = np.asarray(values, dtype=np.float64).ravel()
        if data.size == 0:
            raise EmptySampleError("TailProbe.from_values")
        a_grid = np.asarray(a_grid, dtype=np.float64)
        x_grid = np.asarray(x_grid, dtype=np.float64)
        _check_grids(a_grid, x_grid)

        counts = np.empty((a_grid.size, x_grid.size), dtype=np.int64)
        for ia, a in enumerate(a_grid):
            scaled = data / a
            for ix, x in enumerate(x_grid):
                counts[ia, ix] = _exceedances(scaled, x)
        return cls(a_grid, x_grid, counts, int(data.size))

    def cells(self, confidence: float = 0.95) -> List[TailCell]:
        """One TailCell per (a, x), flagged where no exceedance was seen."""
        result = []
        for ia, a in enumerate(self.a_grid):
            for ix, x in enumerate(self.x_grid):
                estimate = _estimate(int(self.exceed_counts[ia, ix]), self.total, confidence)
                diagnostic = mdp_diagnostic(estimate.p_hat, a, estimate.ci_hi)
                result.append(TailCell(
                    a=float(a),
                    x=float(x),
                    exceed=estimate.exceed,
                    total=estimate.total,
                    p_hat=estimate.p_hat,
                    ci_lo=estimate.ci_lo,
                    ci_hi=estimate.ci_hi,
                    diagnostic=diagnostic,
                    rate=rate_function(float(x)),
                    flag=ZERO_COUNT_FLAG if estimate.zero_count else None,
                ))
        return result


def _check_grids(a_grid: np.ndarray, x_grid: np.ndarray) -> None:
    if a_grid.size == 0 or np.any(~np.isfinite(a_grid)) or np.any(a_grid < 1.0):
        raise ParameterError("a_grid", a_grid.tolist(), "a values must be finite and >= 1")
    if x_grid.size == 0 or np.any(~np.isfinite(x_grid)) or np.any(x_grid == 0.0):
        raise ParameterError("x_grid", x_grid.tolist(), "x values must be finite and nonzero")
