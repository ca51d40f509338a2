"""Experiment harness: replicate runner, the six experiments and report output."""

from .base import CSV_COLUMNS, ExperimentContext, experiment_id, fold_moments
from .counting_clt import run_counting_clt
from .defaults import apply_defaults
from .duality import events_agree, run_duality
from .eigenvalue_clt import run_eigenvalue_clt
from .interlacing import even_superposition, interlacing_violations, run_interlacing
from .mdp_probe import run_mdp_probe
from .registry import EXPERIMENTS, run_experiment
from .report import read_replicates, read_summary, write_report
from .runner import Block, ReplicateTable, plan_blocks, run_replicates
from .universality import require_matched, run_universality

__all__ = [
    "CSV_COLUMNS",
    "ExperimentContext",
    "experiment_id",
    "fold_moments",
    "apply_defaults",
    "Block",
    "ReplicateTable",
    "plan_blocks",
    "run_replicates",
    "run_counting_clt",
    "run_eigenvalue_clt",
    "run_mdp_probe",
    "run_universality",
    "require_matched",
    "run_interlacing",
    "interlacing_violations",
    "even_superposition",
    "run_duality",
    "events_agree",
    "EXPERIMENTS",
    "run_experiment",
    "write_report",
    "read_replicates",
    "read_summary",
]
