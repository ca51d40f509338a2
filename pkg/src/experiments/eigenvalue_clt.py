"""Central limit theorems for individual bulk and edge eigenvalues."""

from functools import partial
from typing import Callable, Optional, Tuple

import numpy as np

from ..config.settings import Settings
from ..ensembles.streams import COMPARE, PRIMARY
from ..models.configs import EnsembleName, ExperimentConfig
from ..models.schemas import ExperimentReport
from ..statistics import (
    ks_distance,
    ks_two_sample,
    standardize_bulk_eigenvalue,
    standardize_edge_eigenvalue,
)
from ..utils.logging import get_logger
from .base import ExperimentContext
from .sources import eigenvalue_kernel

logger = get_logger(__name__)


def eigenvalue_target(cfg: ExperimentConfig) -> Tuple[str, int, Callable[[float, int], float], float]:
    """Statistic name, 1-based index, standardizer and KS bound for the query.

    Edge queries target lambda_{n-i}; bulk queries target lambda_i.
    """
    query = cfg.query
    if query.kind == "bulk_index":
        i = query.resolve(cfg.n)

        def bulk(lam: float, beta: int) -> float:
            return standardize_bulk_eigenvalue(lam, i, cfg.n, beta).value

        return "bulk_eigenvalue", i, bulk, 0.05

    edge = query.resolve(cfg.n)

    def edge_stat(lam: float, beta: int) -> float:
        return standardize_edge_eigenvalue(lam, edge, beta).value

    return "edge_eigenvalue", cfg.n - edge.i, edge_stat, 0.1


def sample_standardized(ctx: ExperimentContext, ensemble: EnsembleName, group: int,
                        statistic: str, index: int, standardize) -> np.ndarray:
    """Run the eigenvalue kernel for ``ensemble``, record it and return Z values."""
    cfg = ctx.cfg
    table = ctx.run(partial(eigenvalue_kernel, ensemble, cfg.n, index), group)
    raw = table.column(0)
    z = np.array([standardize(lam, ensemble.beta) for lam in raw])
    ctx.record(statistic, ensemble.value, cfg.n, raw, table.labels, z)
    return z


def run_eigenvalue_clt(cfg: ExperimentConfig, settings: Optional[Settings] = None) -> ExperimentReport:
    """Extract lambda_i (bulk) or lambda_{n-i} (edge), standardize and test normality."""
    ctx = ExperimentContext.create(cfg, settings)
    cfg = ctx.cfg
    statistic, index, standardize, ks_bound = eigenvalue_target(cfg)
    logger.info(
        f"Eigenvalue CLT: {cfg.ensemble.value} n={cfg.n} {statistic} index={index} "
        f"reps={cfg.replications}"
    )

    z = sample_standardized(ctx, cfg.ensemble, PRIMARY, statistic, index, standardize)
    ks = ks_distance(z)
    ctx.check_below("ks_normal", ks, ks_bound)

    metrics = {"index": index, "beta": cfg.ensemble.beta}
    if cfg.compare_ensemble is not None:
        other = sample_standardized(ctx, cfg.compare_ensemble, COMPARE,
                                    f"{statistic}_compare", index, standardize)
        distance, p_value = ks_two_sample(z, other)
        metrics.update({"compare_ks": distance, "compare_p_value": p_value})
        ctx.check_below("exchangeability_ks", distance, 0.05)

    return ctx.report(statistic, ks=ks, metrics=metrics)
