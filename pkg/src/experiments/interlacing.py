"""GOE/GUE/GSE relations through superposition and Cauchy interlacing."""

import math
from functools import partial
from typing import Optional

import numpy as np

from ..config.settings import Settings
from ..ensembles import GOE, principal_submatrix, sample_dense, sample_tridiagonal_gaussian
from ..ensembles.streams import AUXILIARY, COMPARE, CONTROL, PRIMARY, REFERENCE
from ..exceptions import SizeError
from ..linalg import all_eigenvalues, householder_tridiagonalize, kth_eigenvalue
from ..models.configs import EnsembleName, ExperimentConfig
from ..models.schemas import ExperimentReport
from ..statistics import ks_two_sample
from ..utils.logging import get_logger
from .base import ExperimentContext
from .sources import beta_hermite_kernel, counting_kernel

logger = get_logger(__name__)

INTERLACING_TOL = 1e-10

# Columns of the superposition kernel
TOP, BULK, ETA, VIOLATIONS = range(4)


def interlacing_violations(parent: np.ndarray, child: np.ndarray, tol: float = INTERLACING_TOL) -> int:
    """Indices where parent[k] <= child[k] <= parent[k+1] fails beyond ``tol``.

    ``tol`` is relative to the spectral radius of ``parent``.
    """
    slack = tol * max(1.0, float(np.max(np.abs(parent))))
    low = np.count_nonzero(child < parent[:-1] - slack)
    high = np.count_nonzero(child > parent[1:] + slack)
    return int(low + high)


def even_superposition(first: np.ndarray, second: np.ndarray) -> np.ndarray:
    """Second, fourth, ... points of the merged spectra."""
    return np.sort(np.concatenate([first, second]))[1::2]


def superposition_kernel(n: int, y: float, rng: np.random.Generator, count: int) -> np.ndarray:
    """
    Per replicate: top and middle even-superposition points (W_n scale), the
    interlacing remainder eta' at threshold y and the interlacing violation count.

    GOE_n comes from the tridiagonal model, GOE_{n+1} is dense so that its
    principal submatrix is available.
    """
    out = np.empty((count, 4))
    root = math.sqrt(n)
    y_raw = y * root
    middle = n // 2
    for r in range(count):
        small = all_eigenvalues(sample_tridiagonal_gaussian(1, n, rng))
        big_sample = sample_dense(GOE, n + 1, rng)
        big = all_eigenvalues(householder_tridiagonalize(big_sample))
        sub = all_eigenvalues(householder_tridiagonalize(principal_submatrix(big_sample)))

        even = even_superposition(small, big)
        n_even = np.count_nonzero(even >= y_raw)
        n_small = np.count_nonzero(small >= y_raw)
        n_sub = np.count_nonzero(sub >= y_raw)

        out[r, TOP] = even[-1] / root
        out[r, BULK] = even[middle - 1] / root
        out[r, ETA] = 2 * n_even - n_small - n_sub
        out[r, VIOLATIONS] = interlacing_violations(big, sub)
    return out


def gue_reference_kernel(n: int, rng: np.random.Generator, count: int) -> np.ndarray:
    """Top and middle GUE_n eigenvalues at the W_n scale."""
    out = np.empty((count, 2))
    root = math.sqrt(n)
    for r in range(count):
        T = sample_tridiagonal_gaussian(2, n, rng)
        out[r, 0] = kth_eigenvalue(T, n) / root
        out[r, 1] = kth_eigenvalue(T, n // 2) / root
    return out


def gse_from_goe_kernel(n: int, rng: np.random.Generator, count: int) -> np.ndarray:
    """Top GSE_n point as y_{2n}/sqrt(2) from GOE_{2n+1}, at the W_n scale."""
    out = np.empty(count)
    scale = 1.0 / (math.sqrt(2.0) * math.sqrt(n))
    for r in range(count):
        T = sample_tridiagonal_gaussian(1, 2 * n + 1, rng)
        out[r] = kth_eigenvalue(T, 2 * n) * scale
    return out


def run_interlacing(cfg: ExperimentConfig, settings: Optional[Settings] = None) -> ExperimentReport:
    """
    Check the superposition, Cauchy and GSE relations between GOE and GUE.

    (a) Even points of independent GOE_n and GOE_{n+1} spectra against GUE_n
    (top and middle points, two-sample KS). (b) Cauchy interlacing of a
    GOE_{n+1} sample with its principal submatrix and the remainder
    eta' in {-2, ..., 2}. (c) Even points of GOE_{2n+1} over sqrt(2) against
    the GSE top eigenvalue. Also reports the GOE/GUE counting variance ratio
    at the edge window for size ``compare_n`` (default n).

    Raises:
        SizeError: If n < 2.
    """
    if cfg.n < 2:
        raise SizeError("run_interlacing", cfg.n, 2)
    ctx = ExperimentContext.create(cfg, settings)
    cfg = ctx.cfg
    n = cfg.n
    window = cfg.query.resolve(n, ctx.settings.delta)
    logger.info(f"Interlacing: n={n} y={window.y:.6f} reps={cfg.replications}")

    # (a) and (b)
    sup = ctx.run(partial(superposition_kernel, n, window.y), PRIMARY)
    ctx.record("superposition_top", "goe+goe", n, sup.column(TOP), sup.labels)
    ctx.record("superposition_bulk", "goe+goe", n, sup.column(BULK), sup.labels)
    ctx.record("eta_prime", "goe", n, sup.column(ETA), sup.labels)
    ctx.record("interlacing_violations", "goe", n, sup.column(VIOLATIONS), sup.labels)

    gue = ctx.run(partial(gue_reference_kernel, n), COMPARE)
    ctx.record("gue_top", EnsembleName.TRIDIAG_GUE.value, n, gue.column(0), gue.labels)
    ctx.record("gue_bulk", EnsembleName.TRIDIAG_GUE.value, n, gue.column(1), gue.labels)

    top_ks, top_p = ks_two_sample(sup.column(TOP), gue.column(0))
    bulk_ks, bulk_p = ks_two_sample(sup.column(BULK), gue.column(1))
    violations = int(np.sum(sup.column(VIOLATIONS)))
    eta = sup.column(ETA)
    eta_in_range = bool(np.all((eta >= -2) & (eta <= 2)))

    ctx.check("cauchy_interlacing", violations == 0,
              f"{violations} violation(s) over {cfg.replications} replicates")
    ctx.check("eta_prime_range", eta_in_range,
              f"eta' in [{int(eta.min())}, {int(eta.max())}]")
    ctx.check_below("superposition_top_ks", top_ks, 0.05)
    ctx.check_below("superposition_bulk_ks", bulk_ks, 0.05)

    # (c)
    gse_goe = ctx.run(partial(gse_from_goe_kernel, n), CONTROL)
    gse_ref = ctx.run(partial(beta_hermite_kernel, 4.0, n, n), REFERENCE)
    ctx.record("gse_top_from_goe", "goe", n, gse_goe.column(0), gse_goe.labels)
    ctx.record("gse_top", "gse", n, gse_ref.column(0), gse_ref.labels)
    gse_ks, gse_p = ks_two_sample(gse_goe.column(0), gse_ref.column(0))
    ctx.check_below("gse_top_ks", gse_ks, 0.05)

    # GOE counting variance is twice the GUE one at the edge
    m = cfg.compare_n or n
    m_window = cfg.query.resolve(m, ctx.settings.delta)
    goe_counts = ctx.run(partial(counting_kernel, EnsembleName.TRIDIAG_GOE, m, m_window.y), AUXILIARY)
    gue_counts = ctx.run(partial(counting_kernel, EnsembleName.TRIDIAG_GUE, m, m_window.y), AUXILIARY + 1)
    ctx.record("goe_count", EnsembleName.TRIDIAG_GOE.value, m, goe_counts.column(0), goe_counts.labels)
    ctx.record("gue_count", EnsembleName.TRIDIAG_GUE.value, m, gue_counts.column(0), gue_counts.labels)
    ratio = None
    if cfg.replications >= 2:
        gue_var = float(np.var(gue_counts.column(0), ddof=1))
        if gue_var > 0:
            ratio = float(np.var(goe_counts.column(0), ddof=1)) / gue_var
    ctx.check_range("goe_gue_variance_ratio", ratio, 1.6, 2.4)

    metrics = {
        "y": window.y,
        "superposition_top_ks": top_ks,
        "superposition_top_p_value": top_p,
        "superposition_bulk_ks": bulk_ks,
        "superposition_bulk_p_value": bulk_p,
        "gse_top_ks": gse_ks,
        "gse_top_p_value": gse_p,
        "interlacing_violations": violations,
        "eta_prime_min": int(eta.min()),
        "eta_prime_max": int(eta.max()),
        "variance_ratio_n": m,
        "variance_ratio_y": m_window.y,
        "goe_gue_variance_ratio": ratio,
    }
    return ctx.report("superposition_top", ks=top_ks, metrics=metrics)
