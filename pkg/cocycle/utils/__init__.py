"""Módulo de utilidades - Primitivas de grafos compartidas."""

from cocycle.utils.graph_core import (
    default_spanning_tree,
    enumerate_spanning_trees,
    incidence_matrix,
    select_tree,
    validate_tree,
)

__all__ = [
    "incidence_matrix",
    "default_spanning_tree",
    "validate_tree",
    "select_tree",
    "enumerate_spanning_trees",
]
