"""Atom distributions: the laws of individual matrix entries."""

import math
from enum import Enum
from fractions import Fraction
from typing import Any, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

Moments = Tuple[float, float, float, float]

# Three-point law {-sqrt(3), 0, +sqrt(3)} in units of the scale
_THREE_POINT_SQUARED_SUPPORT = (3, 0, 3)
_THREE_POINT_WEIGHTS = (Fraction(1, 6), Fraction(2, 3), Fraction(1, 6))


class AtomKind(str, Enum):
    """Supported atom laws."""
    GAUSSIAN_REAL = "gaussian_real"
    GAUSSIAN_COMPLEX = "gaussian_complex"
    THREE_POINT_MATCHED = "three_point_matched"
    RADEMACHER = "rademacher"


class AtomDistribution(BaseModel):
    """Law of a matrix entry with its moments per real component.

    ``variance`` parametrizes GaussianReal, ``scale`` parametrizes the
    three-point and Rademacher laws. ``complex_valued`` builds a complex
    entry from independent real and imaginary parts, each distributed as
    the component law. GaussianComplex always has components of variance 1/2.
    """
    kind: AtomKind
    variance: float = Field(1.0, gt=0.0)
    scale: float = Field(1.0, gt=0.0)
    complex_valued: bool = False

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="before")
    @classmethod
    def _complex_kind(cls, data: Any) -> Any:
        if isinstance(data, dict) and data.get("kind") in (
            AtomKind.GAUSSIAN_COMPLEX, AtomKind.GAUSSIAN_COMPLEX.value
        ):
            data = {**data, "complex_valued": True}
        return data

    @classmethod
    def gaussian_real(cls, variance: float = 1.0) -> "AtomDistribution":
        return cls(kind=AtomKind.GAUSSIAN_REAL, variance=variance)

    @classmethod
    def gaussian_complex(cls) -> "AtomDistribution":
        return cls(kind=AtomKind.GAUSSIAN_COMPLEX, complex_valued=True)

    @classmethod
    def three_point(cls, scale: float = 1.0, complex_valued: bool = False) -> "AtomDistribution":
        return cls(kind=AtomKind.THREE_POINT_MATCHED, scale=scale,
                   complex_valued=complex_valued)

    @classmethod
    def rademacher(cls, scale: float = 1.0, complex_valued: bool = False) -> "AtomDistribution":
        return cls(kind=AtomKind.RADEMACHER, scale=scale, complex_valued=complex_valued)

    @property
    def component_variance(self) -> float:
        return atom_moments(self)[1]

    @property
    def total_variance(self) -> float:
        """E|Z|^2 summed over real and imaginary parts."""
        return self.component_variance * (2 if self.complex_valued else 1)

    def draw(self, rng: np.random.Generator, size: int) -> np.ndarray:
        """Draw ``size`` i.i.d. entries (complex dtype when complex_valued)."""
        if not self.complex_valued:
            return self._draw_component(rng, size)
        real = self._draw_component(rng, size)
        imag = self._draw_component(rng, size)
        return real + 1j * imag

    def _draw_component(self, rng: np.random.Generator, size: int) -> np.ndarray:
        if self.kind == AtomKind.GAUSSIAN_REAL:
            return rng.normal(0.0, math.sqrt(self.variance), size)
        if self.kind == AtomKind.GAUSSIAN_COMPLEX:
            return rng.normal(0.0, math.sqrt(0.5), size)
        if self.kind == AtomKind.THREE_POINT_MATCHED:
            atom = self.scale * math.sqrt(3.0)
            u = rng.random(size)
            return np.where(u < 1 / 6, -atom, np.where(u < 1 / 3, atom, 0.0))
        signs = 2.0 * rng.integers(0, 2, size) - 1.0
        return self.scale * signs


def _symmetric_moments(weights, squared_support, unit: float) -> Moments:
    """Moments of a symmetric finite law whose support is sqrt(squared_support)*unit."""
    m2 = sum(w * c for w, c in zip(weights, squared_support))
    m4 = sum(w * c * c for w, c in zip(weights, squared_support))
    return (0.0, float(m2) * unit ** 2, 0.0, float(m4) * unit ** 4)


def atom_moments(dist: AtomDistribution) -> Moments:
    """Exact first four moments (m1, m2, m3, m4) per real component."""
    if dist.kind == AtomKind.GAUSSIAN_REAL:
        return (0.0, dist.variance, 0.0, 3.0 * dist.variance ** 2)
    if dist.kind == AtomKind.GAUSSIAN_COMPLEX:
        return (0.0, 0.5, 0.0, 0.75)
    if dist.kind == AtomKind.THREE_POINT_MATCHED:
        return _symmetric_moments(_THREE_POINT_WEIGHTS, _THREE_POINT_SQUARED_SUPPORT, dist.scale)
    return (0.0, dist.scale ** 2, 0.0, dist.scale ** 4)
