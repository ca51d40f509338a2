"""Semicircle density, distribution function and classical locations."""

import math

from scipy.optimize import bisect

from ..exceptions import DomainError

_EDGE = 2.0


def density(x: float) -> float:
    """(1/2pi) sqrt(4 - x^2) on [-2, 2], zero outside."""
    if abs(x) > _EDGE:
        return 0.0
    return math.sqrt(max(4.0 - x * x, 0.0)) / (2.0 * math.pi)


def cdf(t: float) -> float:
    """Integral of the density from -2 to t, in closed form."""
    if t <= -_EDGE:
        return 0.0
    if t >= _EDGE:
        return 1.0
    value = 0.5 + t * math.sqrt(4.0 - t * t) / (4.0 * math.pi) + math.asin(t / 2.0) / math.pi
    return min(1.0, max(0.0, value))


def classical_location(x: float) -> float:
    """
    The semicircle quantile t(x), i.e. the t in [-2, 2] with cdf(t) = x.

    Solved by bisection: the density vanishes at both edges, where Newton
    steps are unreliable.

    Raises:
        DomainError: If x is outside [0, 1].
    """
    if not 0.0 <= x <= 1.0:
        raise DomainError("classical_location", f"fraction {x} outside [0, 1]")
    if x == 0.0:
        return -_EDGE
    if x == 1.0:
        return _EDGE
    if x == 0.5:
        return 0.0
    return float(bisect(lambda t: cdf(t) - x, -_EDGE, _EDGE, xtol=1e-12))


def bulk_variance(n: int) -> float:
    """Leading term (1/2pi^2) log n of the bulk counting variance."""
    if n < 2:
        raise DomainError("bulk_variance", f"n must be at least 2, got {n}")
    return math.log(n) / (2.0 * math.pi ** 2)
