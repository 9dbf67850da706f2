"""
Puente con el Laplaciano: Delta = incidencia por su traspuesta, grafo cono con
un ápice unido a todos los vértices y la identidad *K(cono) = Delta + 1.
"""

from dataclasses import dataclass
from typing import Dict

from cocycle.config import CONE_APEX_ID, CONE_EDGE_TEMPLATE, SPANNING_TREE_GUARD
from cocycle.core.exceptions import NotSimple
from cocycle.core.linalg import IntPolynomial, RationalMatrix, char_poly
from cocycle.core.reports import VerificationReport
from cocycle.generators.basis import build_basis
from cocycle.models.graph_models import Edge, OrientedGraph, TreeSelection
from cocycle.utils.graph_core import enumerate_spanning_trees, incidence_matrix, validate_tree
from cocycle.verifiers.ks_spectral import ks_matrices


@dataclass(frozen=True)
class ConeResult:
    """Grafo aumentado, árbol estrella del ápice y vértice -> índice de cocuerda."""

    augmented: OrientedGraph
    star_tree: TreeSelection
    vertex_map: Dict[str, int]
    apex: str


def _require_simple(g: OrientedGraph) -> None:
    if not g.is_simple():
        raise NotSimple("El Laplaciano exige un grafo sin lazos ni aristas múltiples")


def laplacian(g: OrientedGraph) -> RationalMatrix:
    """Delta = D D^T: grados en la diagonal y -1 entre vértices adyacentes."""
    _require_simple(g)
    boundary = incidence_matrix(g)
    return boundary @ boundary.T


def cone_augment(g: OrientedGraph, apex: str = CONE_APEX_ID) -> ConeResult:
    """
    Añade el ápice y una arista ápice -> v por cada vértice, en orden de usuario.
    El árbol estrella son las aristas del ápice.
    """
    _require_simple(g)
    while apex in g.vertices:
        apex += "'"
    taken = set(g.edge_ids)
    apex_edges = []
    for v in g.vertices:
        edge_id = CONE_EDGE_TEMPLATE.format(apex=apex, vertex=v)
        while edge_id in taken:
            edge_id += "'"
        taken.add(edge_id)
        apex_edges.append(Edge(edge_id, apex, v))

    augmented = OrientedGraph((apex,) + g.vertices, g.edges + tuple(apex_edges))
    star = validate_tree(augmented, [e.id for e in apex_edges])
    vertex_map = {v: star.cochord_index(e.id) for v, e in zip(g.vertices, apex_edges)}
    return ConeResult(augmented, star, vertex_map, apex)


def laplacian_shift_check(g: OrientedGraph, guard: int = SPANNING_TREE_GUARD) -> VerificationReport:
    """
    *K del cono con el árbol estrella es exactamente Delta + 1, de modo que el
    espectro del Laplaciano aparece desplazado en una unidad.
    """
    report = VerificationReport("Puente con el Laplaciano")
    delta = laplacian(g)
    cone = cone_augment(g)
    ks = ks_matrices(build_basis(cone.augmented, cone.star_tree))
    n = g.num_vertices

    report.check_matrix("*K(cono) = Delta + 1", ks.Kstar, delta + RationalMatrix.identity(n))
    report.check_equal("|E(cono)| = |E| + |V|", cone.augmented.num_edges, g.num_edges + n)
    report.check_equal("|C(cono)| = |E|", cone.augmented.cyclomatic_number, g.num_edges)

    report.add("Delta simétrica", delta.is_symmetric())
    report.check_matrix("filas de Delta suman cero", delta @ RationalMatrix.from_rows([[1]] * n, cols=1),
                        RationalMatrix.zeros(n, 1))
    char_delta = char_poly(delta)
    report.check_equal("autovalor 0 simple", char_delta.multiplicity(0), 1)
    minors = (delta + RationalMatrix.identity(n)).leading_minors()
    report.add("Delta + 1 definida positiva", all(m > 0 for m in minors),
               f"menores principales líderes: {[str(m) for m in minors]}")

    shifted = IntPolynomial.from_poly(char_delta.to_poly().shift(-1))
    char_cone = char_poly(ks.Kstar)
    report.check_equal("espectro desplazado en 1", char_cone.coefficients, shifted.coefficients)

    if cone.augmented.num_edges <= guard:
        count = enumerate_spanning_trees(cone.augmented, guard)
        report.check_equal("det *K(cono) = #árboles del cono", ks.Kstar.det(), count)
        report.values['cone_spanning_trees'] = count
    else:
        report.note(f"Conteo de árboles del cono omitido: |E| = {cone.augmented.num_edges} > {guard}")

    report.values.update({
        'laplacian': delta,
        'cone_Kstar': ks.Kstar,
        'char_laplacian': str(char_delta),
        'shifted_minors': minors,
    })
    return report
