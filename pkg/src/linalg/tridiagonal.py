"""Real symmetric tridiagonal matrices and scale conventions."""

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Tuple

import numpy as np

from ..exceptions import NumericError, ParameterError


class ScaleTag(str, Enum):
    """Scale of the entries relative to the raw Wigner matrix M_n.

    Mn is the raw scale (spectral edge near 2*sqrt(n)), Wn = M_n/sqrt(n)
    has its spectrum in [-2, 2] and An = sqrt(n)*M_n is the fine scale.
    """
    MN = "Mn"
    WN = "Wn"
    AN = "An"

    @property
    def exponent(self) -> float:
        """Power of n multiplying M_n at this scale."""
        return {ScaleTag.MN: 0.0, ScaleTag.WN: -0.5, ScaleTag.AN: 0.5}[self]


@dataclass(frozen=True, eq=False)
class TridiagonalMatrix:
    """Symmetric tridiagonal matrix stored as its diagonal and first off-diagonal."""
    diag: np.ndarray
    offdiag: np.ndarray
    scale_tag: ScaleTag = ScaleTag.MN

    def __post_init__(self):
        diag = np.ascontiguousarray(self.diag, dtype=np.float64)
        offdiag = np.ascontiguousarray(self.offdiag, dtype=np.float64)

        if diag.ndim != 1 or diag.size == 0:
            raise ParameterError("diag", diag.shape, "diagonal must be a non-empty vector")
        if offdiag.ndim != 1 or offdiag.size != diag.size - 1:
            raise ParameterError(
                "offdiag", offdiag.shape,
                f"off-diagonal must have length {diag.size - 1}"
            )
        if not (np.all(np.isfinite(diag)) and np.all(np.isfinite(offdiag))):
            raise NumericError("Tridiagonal matrix has non-finite entries")

        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "offdiag", offdiag)
        object.__setattr__(self, "scale_tag", ScaleTag(self.scale_tag))

    @property
    def n(self) -> int:
        return int(self.diag.size)

    @cached_property
    def off_sq(self) -> np.ndarray:
        """Squared off-diagonal, the only form the Sturm recurrence needs."""
        return self.offdiag * self.offdiag

    @cached_property
    def radii(self) -> np.ndarray:
        abs_off = np.abs(self.offdiag)
        radii = np.zeros(self.n)
        radii[:-1] += abs_off
        radii[1:] += abs_off
        return radii

    @cached_property
    def gershgorin(self) -> Tuple[float, float]:
        """Interval containing the whole spectrum."""
        return (float(np.min(self.diag - self.radii)), float(np.max(self.diag + self.radii)))

    @cached_property
    def norm_inf(self) -> float:
        return float(np.max(np.abs(self.diag) + self.radii))

    @cached_property
    def pivmin(self) -> float:
        """Smallest pivot magnitude the Sturm count accepts."""
        return max(np.finfo(np.float64).eps * self.norm_inf, np.finfo(np.float64).tiny)

    @cached_property
    def spectral_bound(self) -> float:
        lo, hi = self.gershgorin
        return max(abs(lo), abs(hi))

    @property
    def tolerance(self) -> float:
        """Absolute bisection tolerance for eigenvalues of this matrix."""
        return 1e-12 * max(1.0, self.spectral_bound)

    def to_dense(self) -> np.ndarray:
        return np.diag(self.diag) + np.diag(self.offdiag, 1) + np.diag(self.offdiag, -1)

    def negated(self) -> "TridiagonalMatrix":
        """-T, whose right edge is the left edge of T."""
        return TridiagonalMatrix(-self.diag, -self.offdiag, self.scale_tag)


def rescale(T: TridiagonalMatrix, target: ScaleTag) -> TridiagonalMatrix:
    """Move T to another scale; eigenvalues scale by the same power of n."""
    target = ScaleTag(target)
    if target == T.scale_tag:
        return T
    factor = float(T.n) ** (target.exponent - T.scale_tag.exponent)
    return TridiagonalMatrix(T.diag * factor, T.offdiag * factor, target)
