"""Per-experiment defaults for queries and partner ensembles."""

from ..exceptions import ConfigurationError
from ..models.configs import (
    EdgeIndexQuery,
    EdgeWindowQuery,
    EnsembleName,
    ExperimentConfig,
    ExperimentKind,
)

# Edge index i = floor(n^0.6); edge window s = n^(1/2)
DEFAULT_QUERIES = {
    ExperimentKind.COUNTING_CLT: EdgeWindowQuery(scale_exponent=0.5),
    ExperimentKind.EIGENVALUE_CLT: EdgeIndexQuery(alpha=0.6),
    ExperimentKind.MDP_PROBE: EdgeIndexQuery(alpha=0.6),
    ExperimentKind.UNIVERSALITY: EdgeIndexQuery(alpha=0.6),
    ExperimentKind.INTERLACING: EdgeWindowQuery(scale_exponent=0.5),
    ExperimentKind.DUALITY: EdgeIndexQuery(alpha=0.6),
}

# Gaussian reference and non-matching control per beta
UNIVERSALITY_PARTNERS = {
    2: (EnsembleName.TRIDIAG_GUE, EnsembleName.RADEMACHER),
    1: (EnsembleName.TRIDIAG_GOE, EnsembleName.RADEMACHER_REAL),
}

ALLOWED_QUERIES = {
    ExperimentKind.COUNTING_CLT: ("edge_window",),
    ExperimentKind.EIGENVALUE_CLT: ("edge_index", "bulk_index"),
    ExperimentKind.MDP_PROBE: ("edge_index", "edge_window"),
    ExperimentKind.UNIVERSALITY: ("edge_index", "edge_window"),
    ExperimentKind.INTERLACING: ("edge_window",),
    ExperimentKind.DUALITY: ("edge_index",),
}


def apply_defaults(cfg: ExperimentConfig) -> ExperimentConfig:
    """Fill the query and partner ensembles an experiment needs.

    Raises:
        ConfigurationError: If the configured query does not fit the experiment,
            or universality partners differ in beta from the primary ensemble.
    """
    update = {}
    if cfg.query is None:
        update["query"] = DEFAULT_QUERIES[cfg.experiment]
    elif cfg.query.kind not in ALLOWED_QUERIES[cfg.experiment]:
        raise ConfigurationError(
            f"{cfg.experiment.value} does not accept a {cfg.query.kind} query",
            {"allowed": list(ALLOWED_QUERIES[cfg.experiment])},
        )

    if cfg.experiment == ExperimentKind.UNIVERSALITY:
        primary = cfg.ensemble if "ensemble" in cfg.model_fields_set else EnsembleName.MATCHED
        update["ensemble"] = primary
        reference, control = UNIVERSALITY_PARTNERS[primary.beta]
        if cfg.compare_ensemble is None:
            update["compare_ensemble"] = reference
        if cfg.control_ensemble is None:
            update["control_ensemble"] = control
        partners = [cfg.compare_ensemble or reference, cfg.control_ensemble or control]
        mixed = [e.value for e in partners if e.beta != primary.beta]
        if mixed:
            raise ConfigurationError(
                f"universality compares ensembles of one symmetry class; {primary.value} "
                f"has beta={primary.beta} but {', '.join(mixed)} do not",
                {"ensemble": primary.value, "mismatched": mixed},
            )

    return cfg.model_copy(update=update) if update else cfg
