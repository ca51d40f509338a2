"""Experiment configuration models."""

import math
from enum import Enum
from pathlib import Path
from typing import Annotated, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..ensembles import GOE, GUE, MATCHED, MATCHED_REAL, RADEMACHER, RADEMACHER_REAL, EnsembleSpec
from ..semicircle import EdgeIndex, EdgeWindow


class ExperimentKind(str, Enum):
    """Experiments exposed as CLI subcommands."""
    COUNTING_CLT = "counting-clt"
    EIGENVALUE_CLT = "eigenvalue-clt"
    MDP_PROBE = "mdp-probe"
    UNIVERSALITY = "universality"
    INTERLACING = "interlacing"
    DUALITY = "duality"


class EnsembleName(str, Enum):
    """Dense ensembles by preset name, or the tridiagonal Gaussian fast paths."""
    GUE = "gue"
    GOE = "goe"
    MATCHED = "matched"
    RADEMACHER = "rademacher"
    MATCHED_REAL = "matched-real"
    RADEMACHER_REAL = "rademacher-real"
    TRIDIAG_GUE = "tridiag-gue"
    TRIDIAG_GOE = "tridiag-goe"

    @property
    def is_tridiagonal(self) -> bool:
        return self in (EnsembleName.TRIDIAG_GUE, EnsembleName.TRIDIAG_GOE)

    @property
    def spec(self) -> EnsembleSpec:
        """Dense specification (the Gaussian one for the fast paths)."""
        return {
            EnsembleName.GUE: GUE,
            EnsembleName.GOE: GOE,
            EnsembleName.MATCHED: MATCHED,
            EnsembleName.RADEMACHER: RADEMACHER,
            EnsembleName.MATCHED_REAL: MATCHED_REAL,
            EnsembleName.RADEMACHER_REAL: RADEMACHER_REAL,
            EnsembleName.TRIDIAG_GUE: GUE,
            EnsembleName.TRIDIAG_GOE: GOE,
        }[self]

    @property
    def beta(self) -> int:
        return self.spec.beta


class EdgeWindowQuery(BaseModel):
    """Counting window [y, inf) given by exactly one of s = n**scale_exponent, s, or y."""
    kind: Literal["edge_window"] = "edge_window"
    scale_exponent: Optional[float] = Field(None, gt=0.0, le=1.0)
    s: Optional[float] = Field(None, gt=0.0)
    y: Optional[float] = None

    model_config = ConfigDict(extra="forbid")

    @model_validator(mode="after")
    def _one_parameter(self) -> "EdgeWindowQuery":
        given = [v for v in (self.scale_exponent, self.s, self.y) if v is not None]
        if len(given) > 1:
            raise ValueError("give only one of scale_exponent, s, y")
        if not given:
            self.scale_exponent = 0.5
        return self

    def resolve(self, n: int, delta: float = 0.5) -> EdgeWindow:
        if self.y is not None:
            return EdgeWindow(n=n, y=self.y, delta=delta)
        if self.s is not None:
            return EdgeWindow.from_scale(n, self.s, delta)
        return EdgeWindow.from_exponent(n, self.scale_exponent, delta)


class EdgeIndexQuery(BaseModel):
    """Edge eigenvalue lambda_{n-i} with i = floor(n**alpha) or i given."""
    kind: Literal["edge_index"] = "edge_index"
    alpha: Optional[float] = Field(None, gt=0.0, lt=1.0)
    i: Optional[int] = Field(None, ge=1)

    model_config = ConfigDict(extra="forbid")

    @model_validator(mode="after")
    def _one_parameter(self) -> "EdgeIndexQuery":
        if self.alpha is not None and self.i is not None:
            raise ValueError("give only one of alpha, i")
        if self.alpha is None and self.i is None:
            self.alpha = 0.6
        return self

    def resolve(self, n: int) -> EdgeIndex:
        if self.i is not None:
            return EdgeIndex(n=n, i=self.i)
        return EdgeIndex.from_exponent(n, self.alpha)


class BulkIndexQuery(BaseModel):
    """Bulk eigenvalue lambda_i with i = round(fraction * n)."""
    kind: Literal["bulk_index"] = "bulk_index"
    fraction: float = Field(0.5, gt=0.0, lt=1.0)

    model_config = ConfigDict(extra="forbid")

    def resolve(self, n: int) -> int:
        return min(n - 1, max(1, int(round(self.fraction * n))))


Query = Annotated[
    Union[EdgeWindowQuery, EdgeIndexQuery, BulkIndexQuery],
    Field(discriminator="kind"),
]


class ExperimentConfig(BaseModel):
    """A complete, reproducible experiment description."""
    experiment: ExperimentKind
    ensemble: EnsembleName = EnsembleName.TRIDIAG_GUE
    n: int = Field(256, ge=4)
    replications: int = Field(1000, ge=1)
    seed: int = Field(0, ge=0, lt=2 ** 64)
    query: Optional[Query] = None
    a_grid: List[float] = Field(default_factory=lambda: [1.25, 1.5])
    x_grid: List[float] = Field(default_factory=lambda: [-1.0, 1.0])
    workers: int = Field(1, ge=1)
    output_dir: Optional[Path] = None
    block_size: Optional[int] = Field(None, ge=1)
    compare_ensemble: Optional[EnsembleName] = None
    control_ensemble: Optional[EnsembleName] = None
    compare_n: Optional[int] = Field(None, ge=4)

    model_config = ConfigDict(extra="forbid")

    @field_validator("a_grid")
    @classmethod
    def validate_a_grid(cls, v: List[float]) -> List[float]:
        """Speeds a_n must be finite and at least 1."""
        for a in v:
            if not math.isfinite(a) or a < 1.0:
                raise ValueError(f"a_grid values must be >= 1, got {a}")
        return v

    @field_validator("x_grid")
    @classmethod
    def validate_x_grid(cls, v: List[float]) -> List[float]:
        for x in v:
            if not math.isfinite(x) or x == 0.0:
                raise ValueError(f"x_grid values must be finite and nonzero, got {x}")
        return v
