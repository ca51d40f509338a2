"""Experiment registry and the instrumented entry point used by the CLI."""

import time
from typing import Callable, Dict, Optional

from ..config.settings import Settings, get_settings
from ..exceptions import ConfigurationError
from ..models.configs import ExperimentConfig, ExperimentKind
from ..models.schemas import ExperimentReport
from ..utils.logfire_setup import ExperimentSpan, log_experiment_result
from ..utils.logging import LogContext, get_logger
from .counting_clt import run_counting_clt
from .duality import run_duality
from .eigenvalue_clt import run_eigenvalue_clt
from .interlacing import run_interlacing
from .mdp_probe import run_mdp_probe
from .universality import run_universality

logger = get_logger(__name__)

ExperimentFn = Callable[[ExperimentConfig, Optional[Settings]], ExperimentReport]

EXPERIMENTS: Dict[ExperimentKind, ExperimentFn] = {
    ExperimentKind.COUNTING_CLT: run_counting_clt,
    ExperimentKind.EIGENVALUE_CLT: run_eigenvalue_clt,
    ExperimentKind.MDP_PROBE: run_mdp_probe,
    ExperimentKind.UNIVERSALITY: run_universality,
    ExperimentKind.INTERLACING: run_interlacing,
    ExperimentKind.DUALITY: run_duality,
}


def run_experiment(cfg: ExperimentConfig, settings: Optional[Settings] = None) -> ExperimentReport:
    """
    Run the experiment named by ``cfg.experiment`` inside a Logfire span.

    Args:
        cfg: Validated experiment configuration
        settings: Application settings. If None, loads the cached settings.

    Returns:
        The experiment report with ``wall_time_seconds`` filled in.

    Raises:
        ConfigurationError: If no runner is registered for the experiment.
    """
    settings = settings or get_settings()
    try:
        runner = EXPERIMENTS[cfg.experiment]
    except KeyError:
        raise ConfigurationError(f"Unknown experiment: {cfg.experiment}") from None

    kind = cfg.experiment.value
    with ExperimentSpan(f"experiment.{kind}", experiment=kind, n=cfg.n, seed=cfg.seed), \
            LogContext(experiment=kind, seed=cfg.seed):
        start = time.perf_counter()
        report = runner(cfg, settings)
        wall_time = time.perf_counter() - start

    report = report.model_copy(update={"wall_time_seconds": wall_time})
    failed = [c.name for c in report.checks if not c.passed]
    log_experiment_result(
        kind,
        report.experiment_id,
        report.all_passed,
        wall_time,
        n=cfg.n,
        replications=cfg.replications,
        failed_checks=failed,
    )
    logger.info(
        f"{report.experiment_id}: {len(report.checks) - len(failed)}/{len(report.checks)} checks passed "
        f"in {wall_time:.2f}s"
    )
    return report
