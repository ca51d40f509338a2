"""Four-moment universality: matched Wigner ensembles against GUE or GOE."""

from functools import partial
from typing import Optional

import numpy as np

from ..config.settings import Settings
from ..ensembles import EnsembleSpec, SymmetryClass, matches_gaussian_to_order
from ..ensembles.streams import COMPARE, CONTROL, PRIMARY, REFERENCE
from ..exceptions import MatchingError
from ..models.configs import EnsembleName, ExperimentConfig
from ..models.schemas import ExperimentReport
from ..statistics import (
    ks_critical_value,
    ks_distance,
    ks_two_sample,
    standardize_counting_edge,
    standardize_edge_eigenvalue,
)
from ..utils.logging import get_logger
from .base import ExperimentContext
from .sources import counting_kernel, eigenvalue_kernel

logger = get_logger(__name__)

MATCHED_PREFIX = "matched"


def reference_family(spec: EnsembleSpec) -> str:
    """``gue`` for Hermitian specs, ``goe`` for real symmetric ones."""
    return "gue" if spec.symmetry_class == SymmetryClass.HERMITIAN else "goe"


def require_matched(spec: EnsembleSpec, order: int = 4) -> EnsembleSpec:
    """Return ``spec`` if it matches the Gaussian ensemble of its symmetry class to ``order``.

    Raises:
        MatchingError: If it does not.
    """
    if not matches_gaussian_to_order(spec, order):
        raise MatchingError(spec.name, order, reference_family(spec).upper())
    return spec


def _edge_statistic(ctx: ExperimentContext, ensemble: EnsembleName, group: int, label: str) -> np.ndarray:
    """Draw the configured edge statistic from ``ensemble`` and record it under ``label``."""
    cfg = ctx.cfg
    n = cfg.n
    if cfg.query.kind == "edge_index":
        edge = cfg.query.resolve(n)
        table = ctx.run(partial(eigenvalue_kernel, ensemble, n, n - edge.i), group)
        raw = table.column(0)
        z = np.array([standardize_edge_eigenvalue(lam, edge, ensemble.beta).value for lam in raw])
        statistic = "edge_eigenvalue"
    else:
        window = cfg.query.resolve(n, ctx.settings.delta).require_scale(ctx.settings.s_min)
        table = ctx.run(partial(counting_kernel, ensemble, n, window.y), group)
        raw = table.column(0)
        z = np.array([standardize_counting_edge(int(c), window, 1.0, ensemble.beta).value
                      for c in raw])
        statistic = "counting_edge"

    ctx.record(f"{statistic}:{label}", ensemble.value, n, raw, table.labels, z)
    return z


def run_universality(cfg: ExperimentConfig, settings: Optional[Settings] = None) -> ExperimentReport:
    """
    Compare one edge statistic across ensembles with two-sample KS tests.

    The primary ensemble is tested against the Gaussian reference of its
    symmetry class (GUE for beta=2, GOE for beta=1); a second independent
    reference run gives the null comparison and a non-matching control is
    reported alongside. All ensembles share one standardization.
    """
    ctx = ExperimentContext.create(cfg, settings)
    cfg = ctx.cfg
    primary, reference, control = cfg.ensemble, cfg.compare_ensemble, cfg.control_ensemble
    family = reference_family(primary.spec)

    if primary.spec.name.startswith(MATCHED_PREFIX):
        require_matched(primary.spec)
    logger.info(
        f"Universality: {primary.value} vs {reference.value} (control {control.value}) "
        f"beta={primary.beta} n={cfg.n} reps={cfg.replications}"
    )

    z_primary = _edge_statistic(ctx, primary, PRIMARY, "primary")
    z_ref = _edge_statistic(ctx, reference, COMPARE, family)
    z_ref_null = _edge_statistic(ctx, reference, REFERENCE, f"{family}_null")
    z_control = _edge_statistic(ctx, control, CONTROL, "control")

    reps = cfg.replications
    critical = ks_critical_value(reps, reps, level=0.01)
    matched_ks, matched_p = ks_two_sample(z_primary, z_ref)
    null_ks, null_p = ks_two_sample(z_ref_null, z_ref)
    control_ks, control_p = ks_two_sample(z_control, z_ref)

    ctx.check_below(f"matched_vs_{family}_ks", matched_ks, 0.1)
    ctx.check_below(f"{family}_vs_{family}_null", null_ks, critical)

    metrics = {
        "beta": primary.beta,
        f"matches_{family}_to_order_4": matches_gaussian_to_order(primary.spec, 4),
        f"control_matches_{family}_to_order_4": matches_gaussian_to_order(control.spec, 4),
        f"matched_vs_{family}_ks": matched_ks,
        f"matched_vs_{family}_p_value": matched_p,
        f"{family}_vs_{family}_ks": null_ks,
        f"{family}_vs_{family}_p_value": null_p,
        f"control_vs_{family}_ks": control_ks,
        f"control_vs_{family}_p_value": control_p,
        "ks_critical_99": critical,
    }
    primary_statistic = next(iter(ctx.statistics))
    return ctx.report(primary_statistic, ks=ks_distance(z_primary), metrics=metrics)
