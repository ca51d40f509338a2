"""Edge windows, edge indices and the right-edge asymptotic formulas."""

import math

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..exceptions import DomainError, ParameterError

# Variance factor of the edge eigenvalue statistic per symmetry class
BETA_FACTOR = {2: 1.0, 1: 2.0}


class EdgeWindow(BaseModel):
    """The interval [y, inf) near the right edge, with scale s = n (2 - y)^{3/2}."""
    n: int = Field(..., ge=1)
    y: float
    delta: float = Field(0.5, gt=0.0, lt=4.0)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _inside_bulk_cutoff(self) -> "EdgeWindow":
        if not (-2.0 + self.delta <= self.y < 2.0):
            raise DomainError(
                "EdgeWindow",
                f"y = {self.y} outside [{-2.0 + self.delta}, 2)",
                {"n": self.n, "y": self.y, "delta": self.delta},
            )
        return self

    @property
    def s(self) -> float:
        return self.n * (2.0 - self.y) ** 1.5

    @classmethod
    def from_scale(cls, n: int, s: float, delta: float = 0.5) -> "EdgeWindow":
        """Window whose edge scale equals ``s``."""
        if s <= 0:
            raise DomainError("EdgeWindow", f"edge scale must be positive, got {s}")
        return cls(n=n, y=2.0 - (s / n) ** (2.0 / 3.0), delta=delta)

    @classmethod
    def from_exponent(cls, n: int, exponent: float, delta: float = 0.5) -> "EdgeWindow":
        """Window with s = n**exponent."""
        return cls.from_scale(n, float(n) ** exponent, delta)

    def require_scale(self, s_min: float) -> "EdgeWindow":
        """Return self, or raise if the window is too close to the edge."""
        if self.s < s_min:
            raise DomainError(
                "EdgeWindow",
                f"edge scale {self.s:.4g} below the minimum {s_min}",
                {"n": self.n, "y": self.y, "s": self.s},
            )
        return self


class EdgeIndex(BaseModel):
    """Eigenvalue number n - i counted from the top, 1 <= i < n."""
    n: int = Field(..., ge=2)
    i: int = Field(..., ge=1)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _below_n(self) -> "EdgeIndex":
        if self.i >= self.n:
            raise DomainError("EdgeIndex", f"i = {self.i} must be below n = {self.n}")
        return self

    @classmethod
    def from_exponent(cls, n: int, alpha: float) -> "EdgeIndex":
        """i = floor(n**alpha) for alpha in (0, 1)."""
        if not 0.0 < alpha < 1.0:
            raise ParameterError("alpha", alpha, "index exponent must lie in (0, 1)")
        return cls(n=n, i=max(1, int(math.floor(float(n) ** alpha))))


def edge_expected_count(w: EdgeWindow) -> float:
    """Leading term (2/3pi) s of E N_[y, inf)."""
    return 2.0 * w.s / (3.0 * math.pi)


def edge_variance(w: EdgeWindow) -> float:
    """Leading term (1/2pi^2) log s of Var N_[y, inf).

    Raises:
        DomainError: If s <= 1.
    """
    s = w.s
    if s <= 1.0:
        raise DomainError("edge_variance", f"edge scale must exceed 1, got {s}")
    return math.log(s) / (2.0 * math.pi ** 2)


def classical_edge_location(e: EdgeIndex) -> float:
    """2 - (3 pi i / 2n)^{2/3}."""
    return 2.0 - (3.0 * math.pi * e.i / (2.0 * e.n)) ** (2.0 / 3.0)


def edge_scale_constant() -> float:
    """((3 pi)^{2/3} 2^{1/3})^{-1/2}, about 0.421754."""
    return ((3.0 * math.pi) ** (2.0 / 3.0) * 2.0 ** (1.0 / 3.0)) ** -0.5


def edge_eigenvalue_scale(e: EdgeIndex, beta: int = 2) -> float:
    """Fluctuation scale const * (factor * log i / (i^{2/3} n^{4/3}))^{1/2}.

    The factor is 1 for beta = 2 and 2 for beta = 1.
    """
    if beta not in BETA_FACTOR:
        raise ParameterError("beta", beta, "beta must be 1 or 2")
    if e.i < 2:
        raise DomainError("edge_eigenvalue_scale", f"log i must be positive, got i = {e.i}")
    ratio = BETA_FACTOR[beta] * math.log(e.i) / (e.i ** (2.0 / 3.0) * e.n ** (4.0 / 3.0))
    return edge_scale_constant() * math.sqrt(ratio)


def mdp_quantile_location(e: EdgeIndex, a_n: float, x: float, beta: int = 2) -> float:
    """
    Threshold y_n(a_n) turning {Z_{n,i} / a_n <= x} into a counting event.

    Args:
        e: Edge index (n, i) with i >= 2
        a_n: Moderate deviation speed, at least 1
        x: Deviation level
        beta: 2 (GUE scale) or 1 (GOE scale with the doubled log factor)

    Returns:
        classical_edge_location(e) + a_n * x * edge_eigenvalue_scale(e, beta)

    Raises:
        DomainError: If i < 2.
    """
    if a_n < 1.0:
        raise ParameterError("a_n", a_n, "speed a_n must be at least 1")
    return classical_edge_location(e) + a_n * x * edge_eigenvalue_scale(e, beta)
