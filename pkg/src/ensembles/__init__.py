"""Wigner ensembles: entry laws, specifications and samplers."""

from .atoms import AtomDistribution, AtomKind, atom_moments
from .sampling import (
    WignerSample,
    principal_submatrix,
    sample_beta_hermite,
    sample_dense,
    sample_tridiagonal_gaussian,
)
from .specs import (
    GOE,
    GUE,
    MATCHED,
    MATCHED_REAL,
    RADEMACHER,
    RADEMACHER_REAL,
    EnsembleSpec,
    SymmetryClass,
    matches_gaussian_to_order,
    matches_goe_to_order,
    matches_gue_to_order,
)
from .streams import stream_label, substream

PRESETS = {spec.name: spec for spec in (GUE, GOE, MATCHED, RADEMACHER, MATCHED_REAL, RADEMACHER_REAL)}

__all__ = [
    "AtomDistribution",
    "AtomKind",
    "atom_moments",
    "EnsembleSpec",
    "SymmetryClass",
    "GUE",
    "GOE",
    "MATCHED",
    "RADEMACHER",
    "MATCHED_REAL",
    "RADEMACHER_REAL",
    "PRESETS",
    "matches_gue_to_order",
    "matches_goe_to_order",
    "matches_gaussian_to_order",
    "WignerSample",
    "sample_dense",
    "sample_beta_hermite",
    "sample_tridiagonal_gaussian",
    "principal_submatrix",
    "substream",
    "stream_label",
]
