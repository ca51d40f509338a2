"""Semicircle law and its edge asymptotics."""

from .edge import (
    EdgeIndex,
    EdgeWindow,
    classical_edge_location,
    edge_eigenvalue_scale,
    edge_expected_count,
    edge_scale_constant,
    edge_variance,
    mdp_quantile_location,
)
from .law import bulk_variance, cdf, classical_location, density

__all__ = [
    "density",
    "cdf",
    "classical_location",
    "bulk_variance",
    "EdgeWindow",
    "EdgeIndex",
    "edge_expected_count",
    "edge_variance",
    "classical_edge_location",
    "edge_scale_constant",
    "edge_eigenvalue_scale",
    "mdp_quantile_location",
]
