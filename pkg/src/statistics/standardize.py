"""Standardized counting and eigenvalue statistics."""

import math
from enum import Enum
from typing import Any, Dict

from pydantic import BaseModel, ConfigDict, Field

from ..exceptions import DomainError, ParameterError
from ..semicircle import (
    EdgeIndex,
    EdgeWindow,
    classical_edge_location,
    classical_location,
    edge_eigenvalue_scale,
    edge_expected_count,
    edge_variance,
)
from ..semicircle.edge import BETA_FACTOR


class StatKind(str, Enum):
    COUNTING_EDGE = "counting_edge"
    BULK_EIGENVALUE = "bulk_eigenvalue"
    EDGE_EIGENVALUE = "edge_eigenvalue"


class StandardizedStat(BaseModel):
    """A centered and scaled statistic together with what produced it."""
    value: float
    kind: StatKind
    beta: int = Field(2, ge=1, le=2)
    meta: Dict[str, Any] = Field(default_factory=dict)

    model_config = ConfigDict(frozen=True)

    def __float__(self) -> float:
        return self.value


def _check_beta(beta: int) -> None:
    if beta not in BETA_FACTOR:
        raise ParameterError("beta", beta, "beta must be 1 or 2")


def _finite(quantity: str, value: float) -> float:
    if not math.isfinite(value):
        raise DomainError(quantity, f"non-finite standardized value {value}")
    return value


def standardize_counting_edge(count: int, w: EdgeWindow, a_n: float = 1.0,
                              beta: int = 2) -> StandardizedStat:
    """
    Z_n = (N - (2/3pi) s) / (a_n sqrt((1/2pi^2) log s)).

    For beta = 1 the variance is doubled, matching the real symmetric case.

    Raises:
        ParameterError: If a_n < 1 or beta is not 1 or 2.
        DomainError: If the edge variance is degenerate (s <= 1).
    """
    if a_n < 1.0:
        raise ParameterError("a_n", a_n, "speed a_n must be at least 1")
    _check_beta(beta)
    variance = BETA_FACTOR[beta] * edge_variance(w)
    if variance <= 0.0:
        raise DomainError("standardize_counting_edge", "degenerate variance")

    value = (count - edge_expected_count(w)) / (a_n * math.sqrt(variance))
    return StandardizedStat(
        value=_finite("standardize_counting_edge", value),
        kind=StatKind.COUNTING_EDGE,
        beta=beta,
        meta={"n": w.n, "y": w.y, "s": w.s, "a_n": a_n},
    )


def standardize_bulk_eigenvalue(lam: float, i: int, n: int, beta: int = 2) -> StandardizedStat:
    """
    X_n = sqrt((4 - t^2)/2) (lambda_i - t) / (sqrt(log n)/n), t = t(i/n).

    beta = 1 divides by an extra sqrt(2), the doubled variance of the real case.

    Raises:
        DomainError: If t(i/n)^2 >= 4 or n < 2.
    """
    _check_beta(beta)
    if n < 2:
        raise DomainError("standardize_bulk_eigenvalue", f"n must be at least 2, got {n}")
    t = classical_location(i / n)
    if t * t >= 4.0:
        raise DomainError("standardize_bulk_eigenvalue",
                          f"classical location {t} is at the spectral edge")

    prefactor = math.sqrt((4.0 - t * t) / 2.0)
    scale = math.sqrt(math.log(n)) / n * math.sqrt(BETA_FACTOR[beta])
    value = prefactor * (lam - t) / scale
    return StandardizedStat(
        value=_finite("standardize_bulk_eigenvalue", value),
        kind=StatKind.BULK_EIGENVALUE,
        beta=beta,
        meta={"n": n, "i": i, "t": t},
    )


def standardize_edge_eigenvalue(lam: float, e: EdgeIndex, beta: int = 2) -> StandardizedStat:
    """
    Z_{n,i} = (lambda_{n-i} - (2 - (3 pi i / 2n)^{2/3})) / scale.

    The scale is edge_eigenvalue_scale(e, beta): log i is doubled for beta = 1.

    Raises:
        DomainError: If i < 2.
    """
    _check_beta(beta)
    value = (lam - classical_edge_location(e)) / edge_eigenvalue_scale(e, beta)
    return StandardizedStat(
        value=_finite("standardize_edge_eigenvalue", value),
        kind=StatKind.EDGE_EIGENVALUE,
        beta=beta,
        meta={"n": e.n, "i": e.i},
    )
