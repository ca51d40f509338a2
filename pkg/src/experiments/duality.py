"""Counting/eigenvalue duality: lambda_{n-i} <= y iff N_[y, inf) <= i."""

from functools import partial
from typing import Optional

import numpy as np

from ..config.settings import Settings
from ..ensembles.streams import PRIMARY
from ..linalg import (
    ScaleTag,
    TridiagonalMatrix,
    counting_function,
    kth_eigenvalue,
    rescale,
)
from ..models.configs import EnsembleName, ExperimentConfig
from ..models.schemas import ExperimentReport
from ..semicircle import EdgeIndex, mdp_quantile_location
from ..statistics import standardize_edge_eigenvalue
from ..utils.logging import get_logger
from .base import ExperimentContext
from .sources import draw_normalized

logger = get_logger(__name__)

# Columns of the duality kernel
I_COL, A_COL, X_COL, Y_COL, LAMBDA_COL, COUNT_COL, EIG_EVENT, COUNT_EVENT, SCALE_MISMATCH = range(9)

A_RANGE = (1.0, 3.0)
X_RANGE = (-3.0, 3.0)


def events_agree(T: TridiagonalMatrix, i: int, y: float) -> bool:
    """Whether {lambda_{n-i} <= y} and {N_[y, inf) <= i} coincide on T."""
    return (kth_eigenvalue(T, T.n - i) <= y) == (counting_function(T, y) <= i)


def duality_kernel(ensemble: EnsembleName, n: int, rng: np.random.Generator, count: int) -> np.ndarray:
    """
    Per replicate: draw (i, a, x), place y = y_n(a) for that (i, x), and
    evaluate both sides of the duality on one W_n sample. Also counts at the
    A_n scale, where the threshold is n*y.
    """
    beta = ensemble.beta
    out = np.empty((count, 9))
    i_max = max(2, n // 2)
    for r in range(count):
        i = int(rng.integers(2, i_max + 1))
        a = float(rng.uniform(*A_RANGE))
        x = float(rng.uniform(*X_RANGE))
        edge = EdgeIndex(n=n, i=i)
        y = mdp_quantile_location(edge, a, x, beta)

        T = draw_normalized(ensemble, n, rng)
        lam = kth_eigenvalue(T, n - i)
        count_w = counting_function(T, y)
        count_a = counting_function(rescale(T, ScaleTag.AN), n * y)

        out[r] = (i, a, x, y, lam, count_w, lam <= y, count_w <= i, count_w != count_a)
    return out


def tie_convention_holds(n: int = 6) -> bool:
    """Duality on a diagonal matrix with the threshold placed exactly on eigenvalues."""
    T = TridiagonalMatrix(np.arange(1.0, n + 1.0), np.zeros(n - 1), ScaleTag.WN)
    for y in T.diag:
        for i in range(1, n):
            if not events_agree(T, i, float(y)):
                return False
    return True


def run_duality(cfg: ExperimentConfig, settings: Optional[Settings] = None) -> ExperimentReport:
    """
    Count replicates where the eigenvalue event and the counting event differ.

    Thresholds come from mdp_quantile_location at random (i, a, x), so the
    eigenvalue event is {Z_{n,i}/a <= x}. Every replicate must agree, and the
    counts at the W_n and A_n scales must be equal.
    """
    ctx = ExperimentContext.create(cfg, settings)
    cfg = ctx.cfg
    n = cfg.n
    beta = cfg.ensemble.beta
    logger.info(f"Duality: {cfg.ensemble.value} n={n} reps={cfg.replications}")

    table = ctx.run(partial(duality_kernel, cfg.ensemble, n), PRIMARY)
    values = table.values

    z = np.array([
        standardize_edge_eigenvalue(lam, EdgeIndex(n=n, i=int(i)), beta).value
        for i, lam in zip(values[:, I_COL], values[:, LAMBDA_COL])
    ])
    scaled_event = z / values[:, A_COL] <= values[:, X_COL]
    disagreements = int(np.count_nonzero(values[:, EIG_EVENT] != values[:, COUNT_EVENT]))
    standardized_disagreements = int(np.count_nonzero(scaled_event != values[:, COUNT_EVENT].astype(bool)))
    scale_mismatches = int(np.sum(values[:, SCALE_MISMATCH]))

    ctx.record("edge_eigenvalue", cfg.ensemble.value, n, values[:, LAMBDA_COL], table.labels, z)
    ctx.record("counting_at_quantile", cfg.ensemble.value, n, values[:, COUNT_COL], table.labels)
    ctx.record("disagreement", cfg.ensemble.value, n,
               (values[:, EIG_EVENT] != values[:, COUNT_EVENT]).astype(float), table.labels)

    ctx.check("duality_disagreements", disagreements == 0,
              f"{disagreements} of {cfg.replications} replicates disagree")
    ctx.check("standardized_duality", standardized_disagreements == 0,
              f"{standardized_disagreements} replicate(s) where Z_n,i / a <= x differs from the counting event")
    ctx.check("scale_invariance", scale_mismatches == 0,
              f"{scale_mismatches} count(s) differ between the W_n and A_n scales")
    ctx.check("closed_interval_convention", tie_convention_holds(),
              "thresholds placed exactly on eigenvalues")

    metrics = {
        "disagreements": disagreements,
        "standardized_disagreements": standardized_disagreements,
        "scale_mismatches": scale_mismatches,
        "event_rate": float(np.mean(values[:, COUNT_EVENT])),
        "a_range": list(A_RANGE),
        "x_range": list(X_RANGE),
        "i_max": max(2, n // 2),
    }
    return ctx.report("edge_eigenvalue", metrics=metrics)
