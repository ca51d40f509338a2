"""Central limit theorem for the edge counting function."""

from functools import partial
from typing import Optional

import numpy as np

from ..config.settings import Settings
from ..ensembles.streams import COMPARE, PRIMARY
from ..models.configs import ExperimentConfig
from ..models.schemas import ExperimentReport
from ..semicircle import edge_expected_count, edge_variance
from ..semicircle.edge import BETA_FACTOR
from ..statistics import ks_distance, ks_two_sample, standardize_counting_edge
from ..utils.logging import get_logger
from .base import ExperimentContext
from .sources import counting_kernel

logger = get_logger(__name__)

STATISTIC = "counting_edge"


def _standardize(counts: np.ndarray, window, beta: int) -> np.ndarray:
    return np.array([standardize_counting_edge(int(c), window, 1.0, beta).value for c in counts])


def run_counting_clt(cfg: ExperimentConfig, settings: Optional[Settings] = None) -> ExperimentReport:
    """
    Sample N_[y, inf) at an edge window and compare with its predicted law.

    Reports moments of Z_n at a_n = 1, the KS distance to N(0, 1) and the
    ratio of the empirical variance to (1/2pi^2) log s. With a
    ``compare_ensemble`` the same statistic is drawn from it as well and the
    two samples are compared with a two-sample KS test.
    """
    ctx = ExperimentContext.create(cfg, settings)
    cfg = ctx.cfg
    window = cfg.query.resolve(cfg.n, ctx.settings.delta).require_scale(ctx.settings.s_min)
    beta = cfg.ensemble.beta
    logger.info(
        f"Counting CLT: {cfg.ensemble.value} n={cfg.n} y={window.y:.6f} s={window.s:.4g} "
        f"reps={cfg.replications}"
    )

    table = ctx.run(partial(counting_kernel, cfg.ensemble, cfg.n, window.y), PRIMARY)
    counts = table.column(0)
    z = _standardize(counts, window, beta)
    summary = ctx.record(STATISTIC, cfg.ensemble.value, cfg.n, counts, table.labels, z)

    predicted_variance = BETA_FACTOR[beta] * edge_variance(window)
    count_variance = float(np.var(counts, ddof=1)) if counts.size >= 2 else None
    ratio = count_variance / predicted_variance if count_variance is not None else None
    ks = ks_distance(z)

    ctx.check_range("standardized_mean", summary.mean, -0.15, 0.15)
    ctx.check_range("variance_ratio", ratio, 0.8, 1.2)
    ctx.check_below("ks_normal", ks, 0.05)

    metrics = {
        "y": window.y,
        "s": window.s,
        "expected_count": edge_expected_count(window),
        "mean_count": float(np.mean(counts)),
        "predicted_variance": predicted_variance,
        "count_variance": count_variance,
        "variance_ratio": ratio,
    }

    if cfg.compare_ensemble is not None:
        partner = cfg.compare_ensemble
        other = ctx.run(partial(counting_kernel, partner, cfg.n, window.y), COMPARE)
        other_z = _standardize(other.column(0), window, partner.beta)
        ctx.record(f"{STATISTIC}_compare", partner.value, cfg.n, other.column(0), other.labels, other_z)
        distance, p_value = ks_two_sample(z, other_z)
        metrics.update({"compare_ks": distance, "compare_p_value": p_value})
        ctx.check_below("exchangeability_ks", distance, 0.05)

    return ctx.report(STATISTIC, ks=ks, metrics=metrics)
