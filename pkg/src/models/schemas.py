"""Report schemas for EdgeLab experiments."""

from datetime import datetime
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from .configs import ExperimentConfig


class MomentSummary(BaseModel):
    """Moments of one replicated statistic. Undefined entries are None."""
    count: int = Field(ge=0)
    mean: Optional[float] = None
    variance: Optional[float] = None
    skewness: Optional[float] = None
    excess_kurtosis: Optional[float] = None
    undefined: List[str] = Field(default_factory=list)


class TailCell(BaseModel):
    """One (a, x) cell of a tail probe."""
    a: float = Field(ge=1.0)
    x: float
    exceed: int = Field(ge=0)
    total: int = Field(gt=0)
    p_hat: float = Field(ge=0.0, le=1.0)
    ci_lo: float = Field(ge=0.0, le=1.0)
    ci_hi: float = Field(ge=0.0, le=1.0)
    diagnostic: Optional[float] = None
    rate: float
    flag: Optional[str] = None


class CheckResult(BaseModel):
    """Outcome of one acceptance rule."""
    name: str
    passed: bool = Field(alias="pass")
    detail: str = ""

    model_config = ConfigDict(populate_by_name=True)


class ExperimentReport(BaseModel):
    """Everything an experiment run produces.

    ``replicates`` holds the per-replicate table (a pandas DataFrame) and is
    written as CSV, not as part of the JSON summary.
    """
    experiment_id: str
    config: ExperimentConfig
    moments: MomentSummary
    statistics: Dict[str, MomentSummary] = Field(default_factory=dict)
    ks: Optional[float] = None
    tail_probe: List[TailCell] = Field(default_factory=list)
    checks: List[CheckResult] = Field(default_factory=list)
    metrics: Dict[str, Any] = Field(default_factory=dict)
    wall_time_seconds: float = 0.0
    created_at: datetime = Field(default_factory=datetime.now)
    replicates: Any = Field(default=None, exclude=True)

    model_config = ConfigDict(arbitrary_types_allowed=True)

    @property
    def all_passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def summary_dict(self) -> Dict[str, Any]:
        """JSON-ready summary with check keys serialized as ``pass``."""
        return self.model_dump(mode="json", by_alias=True)
