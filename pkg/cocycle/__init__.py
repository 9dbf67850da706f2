"""
Cocycle - Ciclos, cociclos y proyecciones oblicuas sobre grafos orientados
Version 1.0
"""

from cocycle.config import VERSION

__version__ = VERSION
__author__ = "Usuario"

# Exponer los puntos de entrada principales para importación fácil
from cocycle.generators.basis import build_basis
from cocycle.generators.projections import build_projections
from cocycle.models.graph_models import load_document, load_graph
from cocycle.utils.graph_core import select_tree

__all__ = [
    "load_document",
    "load_graph",
    "select_tree",
    "build_basis",
    "build_projections",
]
