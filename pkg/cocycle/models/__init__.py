"""
Modelos de datos de Cocycle.
"""

from cocycle.models.graph_models import (
    Edge,
    GraphDocument,
    OrientedGraph,
    PlanarEmbedding,
    ThermoState,
    TreeSelection,
    load_document,
    load_graph,
    load_state,
    read_document,
)

__all__ = [
    'Edge',
    'OrientedGraph',
    'TreeSelection',
    'PlanarEmbedding',
    'ThermoState',
    'GraphDocument',
    'load_document',
    'load_graph',
    'load_state',
    'read_document',
]
