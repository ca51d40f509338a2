"""Moderate deviation probe: tail exponents of Z/a_n over an (a, x) grid."""

from functools import partial
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..config.settings import Settings
from ..ensembles.streams import COMPARE, PRIMARY
from ..models.configs import ExperimentConfig
from ..models.schemas import ExperimentReport, TailCell
from ..statistics import (
    TailProbe,
    ks_distance,
    standardize_counting_edge,
    standardize_edge_eigenvalue,
)
from ..utils.logging import get_logger
from .base import ExperimentContext
from .sources import counting_kernel, eigenvalue_kernel

logger = get_logger(__name__)


def _standardized_sample(ctx: ExperimentContext, n: int, group: int) -> Tuple[str, np.ndarray]:
    """Z_{n,i} (edge index query) or Z_n at a_n = 1 (edge window query) at size n."""
    cfg = ctx.cfg
    ensemble = cfg.ensemble
    beta = ensemble.beta
    suffix = "" if n == cfg.n else f"_n{n}"

    if cfg.query.kind == "edge_index":
        edge = cfg.query.resolve(n)
        table = ctx.run(partial(eigenvalue_kernel, ensemble, n, n - edge.i), group)
        raw = table.column(0)
        z = np.array([standardize_edge_eigenvalue(lam, edge, beta).value for lam in raw])
        statistic = "edge_eigenvalue" + suffix
    else:
        window = cfg.query.resolve(n, ctx.settings.delta).require_scale(ctx.settings.s_min)
        table = ctx.run(partial(counting_kernel, ensemble, n, window.y), group)
        raw = table.column(0)
        z = np.array([standardize_counting_edge(int(c), window, 1.0, beta).value for c in raw])
        statistic = "counting_edge" + suffix

    ctx.record(statistic, ensemble.value, n, raw, table.labels, z)
    return statistic, z


def _cell_name(cell: TailCell) -> str:
    return f"a={cell.a:g},x={cell.x:g}"


def _deviation(cell: TailCell) -> Optional[float]:
    if cell.flag is not None or cell.diagnostic is None:
        return None
    return abs(cell.diagnostic - cell.rate)


def run_mdp_probe(cfg: ExperimentConfig, settings: Optional[Settings] = None) -> ExperimentReport:
    """
    Estimate P(Z/a >= x) (x > 0) or P(Z/a <= x) (x < 0) on the configured grid.

    Each cell reports -log(p_hat)/a^2 next to the rate x^2/2. A cell passes
    when the diagnostic lies within a factor 2 of the rate. With
    ``compare_n`` the probe is repeated at that size and each cell must not
    be further from the rate at n than at compare_n.
    """
    ctx = ExperimentContext.create(cfg, settings)
    cfg = ctx.cfg
    logger.info(
        f"MDP probe: {cfg.ensemble.value} n={cfg.n} query={cfg.query.kind} "
        f"a={cfg.a_grid} x={cfg.x_grid} reps={cfg.replications}"
    )

    statistic, z = _standardized_sample(ctx, cfg.n, PRIMARY)
    cells = TailProbe.from_values(z, cfg.a_grid, cfg.x_grid).cells()

    for cell in cells:
        name = f"within_factor_2[{_cell_name(cell)}]"
        if cell.flag is not None:
            ctx.check(name, False, f"no exceedances, diagnostic >= {cell.diagnostic:.4g} is a lower bound")
        else:
            ctx.check(
                name,
                cell.rate / 2.0 <= cell.diagnostic <= 2.0 * cell.rate,
                f"diagnostic {cell.diagnostic:.4g} vs rate {cell.rate:.4g}",
            )

    metrics: Dict[str, object] = {"flagged_cells": sum(1 for c in cells if c.flag is not None)}

    if cfg.compare_n is not None and cfg.compare_n != cfg.n:
        _, z_ref = _standardized_sample(ctx, cfg.compare_n, COMPARE)
        reference = TailProbe.from_values(z_ref, cfg.a_grid, cfg.x_grid).cells()
        trend: List[Dict[str, object]] = []
        for cell, ref in zip(cells, reference):
            here, there = _deviation(cell), _deviation(ref)
            trend.append({"a": cell.a, "x": cell.x, "deviation": here, "reference_deviation": there})
            name = f"trend[{_cell_name(cell)}]"
            if here is None or there is None:
                ctx.check(name, False, "a flagged cell has only a lower bound")
            elif cfg.compare_n < cfg.n:
                ctx.check(name, here <= there, f"|dev| {here:.4g} at n={cfg.n} vs {there:.4g} at n={cfg.compare_n}")
            else:
                ctx.check(name, there <= here, f"|dev| {there:.4g} at n={cfg.compare_n} vs {here:.4g} at n={cfg.n}")
        metrics["reference_n"] = cfg.compare_n
        metrics["reference_cells"] = [c.model_dump() for c in reference]
        metrics["trend"] = trend

    return ctx.report(statistic, ks=ks_distance(z), tail_probe=cells, metrics=metrics)
