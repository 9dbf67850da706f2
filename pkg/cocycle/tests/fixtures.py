"""
Grafos de referencia compartidos por los tests, leídos de data/fixtures/.

    G_square: ciclo v1 v2 v4 v3 con la diagonal e2 (v3 -> v2), árbol {e1, e2, e3}
    G_edge:  una arista a -> b
    G_tri:   triángulo orientado v1 -> v2 -> v3 -> v1, árbol {e1, e2}
    G_loop:  a -> b más el lazo a -> a, árbol {e1}
"""

import os

from cocycle.config import COCYCLE_ROOT, FIXTURES_DIRNAME
from cocycle.generators.basis import build_basis
from cocycle.generators.projections import build_projections
from cocycle.models.graph_models import load_document, read_document
from cocycle.utils.graph_core import select_tree
from cocycle.verifiers.ks_spectral import ks_matrices

FIXTURES_DIR = os.path.join(COCYCLE_ROOT, "data", FIXTURES_DIRNAME)


def fixture_path(name: str) -> str:
    return os.path.join(FIXTURES_DIR, name)


def load_fixture(name: str):
    """Documento validado (grafo, árbol y embebimiento)."""
    return load_document(read_document(fixture_path(name)))


def square_doc():
    return load_fixture("four_vertex.json")


def edge_doc():
    return load_fixture("edge.json")


def tri_doc():
    return load_fixture("triangle.json")


def loop_doc():
    return load_fixture("loop.json")


def analyzed(doc):
    """(base, proyecciones, K/*K) con el árbol del documento o el DFS."""
    tree = select_tree(doc.graph, list(doc.tree) if doc.tree is not None else None)
    b = build_basis(doc.graph, tree)
    p = build_projections(b)
    return b, p, ks_matrices(b, p)
