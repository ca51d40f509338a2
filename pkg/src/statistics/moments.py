"""Mergeable streaming moments (count, mean, central sums M2 to M4)."""

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from ..models.schemas import MomentSummary


@dataclass(frozen=True)
class MomentAccumulator:
    """One-pass central moments; merge combines disjoint samples exactly."""
    count: int = 0
    mean: float = 0.0
    m2: float = 0.0
    m3: float = 0.0
    m4: float = 0.0

    @classmethod
    def from_values(cls, values: Iterable[float]) -> "MomentAccumulator":
        """Two-pass moments of a block of values."""
        if not isinstance(values, np.ndarray):
            values = list(values)
        data = np.asarray(values, dtype=np.float64).ravel()
        if data.size == 0:
            return cls()
        mean = float(np.mean(data))
        dev = data - mean
        dev2 = dev * dev
        return cls(
            count=int(data.size),
            mean=mean,
            m2=float(np.sum(dev2)),
            m3=float(np.sum(dev2 * dev)),
            m4=float(np.sum(dev2 * dev2)),
        )

    @property
    def variance(self) -> float:
        """Unbiased variance; nan below two observations."""
        if self.count < 2:
            return math.nan
        return self.m2 / (self.count - 1)

    def summary(self) -> MomentSummary:
        undefined = []
        mean = self.mean if self.count > 0 else None
        if mean is None:
            undefined.append("mean")

        variance = skewness = kurtosis = None
        if self.count >= 2:
            variance = self.m2 / (self.count - 1)
        else:
            undefined.append("variance")

        if self.count >= 2 and self.m2 > 0.0:
            skewness = math.sqrt(self.count) * self.m3 / self.m2 ** 1.5
            kurtosis = self.count * self.m4 / (self.m2 * self.m2) - 3.0
        else:
            undefined.extend(["skewness", "excess_kurtosis"])

        return MomentSummary(
            count=self.count,
            mean=mean,
            variance=variance,
            skewness=skewness,
            excess_kurtosis=kurtosis,
            undefined=undefined,
        )


def merge(a: MomentAccumulator, b: MomentAccumulator) -> MomentAccumulator:
    """Combine accumulators of two disjoint samples."""
    if b.count == 0:
        return a
    if a.count == 0:
        return b

    na, nb = a.count, b.count
    n = na + nb
    delta = b.mean - a.mean
    delta_n = delta / n
    delta_n2 = delta_n * delta_n
    cross = delta * delta_n * na * nb

    mean = a.mean + delta_n * nb
    m2 = a.m2 + b.m2 + cross
    m3 = (a.m3 + b.m3 + cross * delta_n * (na - nb)
          + 3.0 * delta_n * (na * b.m2 - nb * a.m2))
    m4 = (a.m4 + b.m4 + cross * delta_n2 * (na * na - na * nb + nb * nb)
          + 6.0 * delta_n2 * (na * na * b.m2 + nb * nb * a.m2)
          + 4.0 * delta_n * (na * b.m3 - nb * a.m3))
    return MomentAccumulator(count=n, mean=mean, m2=m2, m3=m3, m4=m4)


def accumulate(acc: MomentAccumulator, value: float) -> MomentAccumulator:
    """acc with one more observation."""
    return merge(acc, MomentAccumulator(count=1, mean=float(value)))


def merge_all(accumulators: Iterable[MomentAccumulator]) -> MomentAccumulator:
    """Left fold of ``merge`` in iteration order."""
    total = MomentAccumulator()
    for acc in accumulators:
        total = merge(total, acc)
    return total
