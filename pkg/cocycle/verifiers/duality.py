#!/usr/bin/env python3
"""
Dualidad planar a partir de un embebimiento combinatorio.

Convenciones:
    - Un dardo es "+e" (recorre e de tail a head) o "-e" (al revés).
    - En una rotación, "e" es el extremo de salida de e y "-e" el de llegada.
    - Regla de trazado: se llega a un vértice por un extremo y se sale por el
      siguiente extremo de su rotación; un extremo "e" sale por +e y "-e" por -e.
    - La arista dual e* va de la cara que contiene -e a la que contiene +e.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Sequence, Tuple

from cocycle.config import DUAL_VERTEX_PREFIX
from cocycle.core.exceptions import (
    BadFaces,
    BadRotation,
    EulerViolation,
    NonSpanningCotree,
    TreeError,
)
from cocycle.core.reports import VerificationReport
from cocycle.generators.basis import BasisBundle, build_basis
from cocycle.generators.projections import ProjectionPair, build_projections
from cocycle.models.graph_models import (
    Edge,
    OrientedGraph,
    PlanarEmbedding,
    TreeSelection,
    make_end,
    split_end,
)
from cocycle.utils.graph_core import validate_tree
from cocycle.verifiers.ks_spectral import ks_matrices

Dart = Tuple[str, bool]          # (id de arista, True si recorre en su sentido)
Face = Tuple[str, ...]           # dardos como cadenas "e1" / "-e1"


def _dart_token(dart: Dart) -> str:
    edge_id, forward = dart
    return edge_id if forward else f"-{edge_id}"


def _parse_dart(token: str) -> Dart:
    edge_id, backwards = split_end(token)
    return edge_id, not backwards


def _arrival_end(dart: Dart) -> str:
    edge_id, forward = dart
    return make_end(edge_id, at_head=forward)


def _departure_end(dart: Dart) -> str:
    edge_id, forward = dart
    return make_end(edge_id, at_head=not forward)


def _dart_from_end(end: str) -> Dart:
    """Dardo que sale por el extremo dado."""
    edge_id, at_head = split_end(end)
    return edge_id, not at_head


def _end_vertex(g: OrientedGraph, end: str) -> str:
    edge_id, at_head = split_end(end)
    e = g.edge(edge_id)
    return e.head if at_head else e.tail


# =============================================================================
# VALIDACIÓN Y TRAZADO
# =============================================================================

def _validate_rotations(g: OrientedGraph, rotations: Mapping[str, Sequence[str]]) -> Dict[str, Tuple[str, ...]]:
    unknown = [v for v in rotations if v not in g.vertices]
    if unknown:
        raise BadRotation(f"Rotación para vértices inexistentes: {', '.join(unknown)}")
    seen = set()
    for v, ends in rotations.items():
        for end in ends:
            edge_id, _ = split_end(end)
            if not g.has_edge(edge_id):
                raise BadRotation(f"Extremo de arista desconocida en {v}: {end}")
            if end in seen:
                raise BadRotation(f"Extremo repetido: {end}")
            if _end_vertex(g, end) != v:
                raise BadRotation(f"El extremo {end} no incide en {v}")
            seen.add(end)
    expected = {make_end(e.id, at_head) for e in g.edges for at_head in (False, True)}
    missing = sorted(expected - seen)
    if missing:
        raise BadRotation(f"Faltan extremos en las rotaciones: {', '.join(missing)}")
    return {v: tuple(rotations.get(v, ())) for v in g.vertices}


def _face_key(g: OrientedGraph, face: Sequence[Dart]) -> Tuple[int, int]:
    return min((g.edge_index(edge_id), 1 if forward else 0) for edge_id, forward in face)


def _canonical_start(g: OrientedGraph, face: List[Dart]) -> List[Dart]:
    key = lambda d: (g.edge_index(d[0]), 1 if d[1] else 0)
    start = min(range(len(face)), key=lambda i: key(face[i]))
    return face[start:] + face[:start]


def trace_faces(g: OrientedGraph, rotations: Mapping[str, Sequence[str]]) -> List[Face]:
    """
    Caras del sistema de rotaciones, ordenadas por la menor arista que contienen
    (ante empate, primero la cara que la recorre al revés).

    Raises:
        BadRotation: si falta, sobra o está mal colocado algún extremo
    """
    rotation = _validate_rotations(g, rotations)
    successor: Dict[str, str] = {}
    for ends in rotation.values():
        for k, end in enumerate(ends):
            successor[end] = ends[(k + 1) % len(ends)]

    remaining = [(e.id, forward) for e in g.edges for forward in (True, False)]
    used = set()
    faces: List[List[Dart]] = []
    for start in remaining:
        if start in used:
            continue
        face = []
        dart = start
        while dart not in used:
            used.add(dart)
            face.append(dart)
            dart = _dart_from_end(successor[_arrival_end(dart)])
        faces.append(_canonical_start(g, face))

    faces.sort(key=lambda face: _face_key(g, face))
    return [tuple(_dart_token(d) for d in face) for face in faces]


def faces_to_rotations(g: OrientedGraph, faces: Sequence[Sequence[str]]) -> Dict[str, Tuple[str, ...]]:
    """
    Reconstruye el sistema de rotaciones: dos dardos consecutivos d, d' de una
    cara definen siguiente(extremo de llegada de d) = extremo de salida de d'.

    Raises:
        BadFaces: dardos repetidos o ausentes, caras que no encadenan o
            vértices cuya rotación no es un único ciclo
    """
    successor: Dict[str, str] = {}
    seen = set()
    for face in faces:
        darts = [_parse_dart(token) for token in face]
        for dart in darts:
            if not g.has_edge(dart[0]):
                raise BadFaces(f"Arista desconocida en una cara: {dart[0]}")
            if dart in seen:
                raise BadFaces(f"Dardo repetido: {_dart_token(dart)}")
            seen.add(dart)
        for d_in, d_out in zip(darts, darts[1:] + darts[:1]):
            arrival, departure = _arrival_end(d_in), _departure_end(d_out)
            if _end_vertex(g, arrival) != _end_vertex(g, departure):
                raise BadFaces(f"{_dart_token(d_in)} y {_dart_token(d_out)} no encadenan")
            successor[arrival] = departure
    if len(seen) != 2 * g.num_edges:
        raise BadFaces("Cada arista debe aparecer una vez en cada sentido")

    rotations: Dict[str, Tuple[str, ...]] = {}
    by_vertex: Dict[str, List[str]] = {v: [] for v in g.vertices}
    for e in g.edges:
        for at_head in (False, True):
            end = make_end(e.id, at_head)
            by_vertex[_end_vertex(g, end)].append(end)
    for v, ends in by_vertex.items():
        cycle: List[str] = []
        if ends:
            end = ends[0]
            while end not in cycle:
                cycle.append(end)
                end = successor[end]
        if len(cycle) != len(ends):
            raise BadFaces(f"La rotación en {v} no es un único ciclo")
        rotations[v] = tuple(cycle)
    return rotations


def embedding_rotations(g: OrientedGraph, emb: PlanarEmbedding) -> Dict[str, Tuple[str, ...]]:
    """Rotaciones del embebimiento; si sólo trae caras, se derivan de ellas."""
    if emb.rotations is not None:
        return _validate_rotations(g, emb.rotations)
    if emb.faces is not None:
        return faces_to_rotations(g, emb.faces)
    raise BadRotation("El embebimiento no trae rotaciones ni caras")


def euler_characteristic(g: OrientedGraph, faces: Sequence[Face]) -> int:
    return g.num_vertices - g.num_edges + len(faces)


# =============================================================================
# GRAFO DUAL
# =============================================================================

@dataclass
class DualResult:
    """Grafo dual, biyección de aristas, coárbol y embebimiento inducido."""

    dual_graph: OrientedGraph
    edge_bijection: Dict[str, str]
    dual_tree: TreeSelection
    faces: List[Face]
    dual_embedding: PlanarEmbedding
    vertex_faces: Dict[str, Face] = field(default_factory=dict)
    flipped: bool = False

    def to_dict(self) -> Dict[str, object]:
        data = self.dual_graph.to_dict()
        data['tree'] = list(self.dual_tree.cochord_edges)
        data.update(self.dual_embedding.to_dict())
        data['primal_faces'] = {v: list(face) for v, face in zip(self.dual_graph.vertices, self.faces)}
        data['flipped'] = self.flipped
        return data


def _swap_end(token: str) -> str:
    edge_id, at_head = split_end(token)
    return make_end(edge_id, not at_head)


def dual_graph(g: OrientedGraph, emb: PlanarEmbedding, t: TreeSelection,
               prefix: str = DUAL_VERTEX_PREFIX) -> DualResult:
    """
    Un vértice dual por cara y una arista dual por arista primal (mismo id),
    orientada de la cara izquierda (-e) a la derecha (+e). El árbol dual es el
    conjunto de cuerdas primales.

    Raises:
        EulerViolation: |V| - |E| + |F| != 2
        NonSpanningCotree: el coárbol no es árbol generador del dual
    """
    rotations = embedding_rotations(g, emb)
    faces = trace_faces(g, rotations)
    chi = euler_characteristic(g, faces)
    if chi != 2:
        raise EulerViolation(f"|V| - |E| + |F| = {chi}")

    names = [f"{prefix}{k + 1}" for k in range(len(faces))]
    face_of_dart: Dict[Dart, str] = {}
    for name, face in zip(names, faces):
        for token in face:
            face_of_dart[_parse_dart(token)] = name

    edges = [Edge(e.id, face_of_dart[(e.id, False)], face_of_dart[(e.id, True)]) for e in g.edges]
    dual = OrientedGraph(names, edges)
    try:
        tree = validate_tree(dual, t.chord_edges)
    except TreeError as exc:
        raise NonSpanningCotree(f"Las cuerdas no forman un árbol del dual: {exc}") from exc

    # Cara dual del vértice v: su rotación invertida, con "e" -> +e* y "-e" -> -e*
    vertex_faces = {v: tuple(reversed(rotations[v])) for v in g.vertices}
    dual_rotations = faces_to_rotations(dual, list(vertex_faces.values()))
    return DualResult(dual, {e.id: e.id for e in g.edges}, tree, faces,
                      PlanarEmbedding(rotations=dual_rotations), vertex_faces)


def reverse_dual(dual: DualResult) -> DualResult:
    """El mismo dual con todas sus aristas invertidas (convención opuesta)."""
    graph = dual.dual_graph.reversed()
    rotations = {v: tuple(_swap_end(end) for end in ends)
                 for v, ends in (dual.dual_embedding.rotations or {}).items()}
    vertex_faces = {v: tuple(_swap_end(token) for token in face) for v, face in dual.vertex_faces.items()}
    return DualResult(graph, dict(dual.edge_bijection),
                      validate_tree(graph, dual.dual_tree.cochord_edges), list(dual.faces),
                      PlanarEmbedding(rotations=rotations), vertex_faces, flipped=not dual.flipped)


def _duality_checks(primal: BasisBundle, p: ProjectionPair, dual: DualResult) -> VerificationReport:
    report = VerificationReport("Dualidad planar")
    dual_basis = build_basis(dual.dual_graph, dual.dual_tree)
    dual_pair = build_projections(dual_basis)

    P, Q = primal.matrix_to_user_order(p.P), primal.matrix_to_user_order(p.Q)
    Omega = primal.matrix_to_user_order(p.omega_full)
    P_dual = dual_basis.matrix_to_user_order(dual_pair.P)
    Q_dual = dual_basis.matrix_to_user_order(dual_pair.Q)
    Omega_dual = dual_basis.matrix_to_user_order(dual_pair.omega_full)

    report.check_matrix("*P = Q^T", P_dual, Q.T)
    report.check_matrix("*Q = P^T", Q_dual, P.T)
    report.check_matrix("*Omega = Omega", Omega_dual, Omega)

    ks, ks_dual = ks_matrices(primal, p), ks_matrices(dual_basis, dual_pair)
    report.check_matrix("K(dual) = *K(primal)", ks_dual.K, ks.Kstar)
    report.check_matrix("*K(dual) = K(primal)", ks_dual.Kstar, ks.K)
    report.check_equal("det K(primal) = det *K(dual)", ks.K.det(), ks_dual.Kstar.det())
    report.values['dual_P'] = P_dual
    report.values['dual_Q'] = Q_dual
    report.values['flipped'] = dual.flipped
    return report


def verify_duality(primal: BasisBundle, p: ProjectionPair, dual: DualResult) -> VerificationReport:
    """
    *P = Q^T, *Q = P^T y *Omega = Omega bajo la identificación de aristas.
    Si falla con la orientación izquierda -> derecha pero pasa con todas las
    aristas duales invertidas, se adopta la inversión y se anota.
    """
    report = _duality_checks(primal, p, dual)
    if report.passed:
        return report
    flipped_report = _duality_checks(primal, p, reverse_dual(dual))
    if flipped_report.passed:
        flipped_report.note("Se invirtieron todas las orientaciones duales")
        return flipped_report
    return report


def dual_of_dual_check(primal: BasisBundle, p: ProjectionPair, dual: DualResult) -> VerificationReport:
    """
    El dual del dual, con el embebimiento inducido, es el grafo primal con
    todas las orientaciones invertidas, el árbol primal y las mismas P y Q.
    """
    report = VerificationReport("Dual del dual")
    g = primal.graph
    double = dual_graph(dual.dual_graph, dual.dual_embedding, dual.dual_tree, prefix="_")

    # Cada cara del dual es la rotación invertida de un vértice primal
    vertex_of_face: Dict[str, str] = {}
    for v, face in dual.vertex_faces.items():
        darts = frozenset(_parse_dart(token) for token in face)
        for name, traced in zip(double.dual_graph.vertices, double.faces):
            if frozenset(_parse_dart(token) for token in traced) == darts:
                vertex_of_face[name] = v
    report.check_equal("caras del dual = vértices primales", len(vertex_of_face), g.num_vertices)
    if len(vertex_of_face) != g.num_vertices:
        return report

    relabelled = {e.id: (vertex_of_face[e.tail], vertex_of_face[e.head]) for e in double.dual_graph.edges}
    expected = {e.id: (e.tail, e.head) for e in g.reversed().edges}
    report.check_equal("orientaciones invertidas", relabelled, expected)
    report.check_equal("árbol primal restaurado", double.dual_tree.tree_edges, primal.tree.tree_edges)

    restored = OrientedGraph(g.vertices, [Edge(e.id, *relabelled[e.id]) for e in g.edges])
    restored_basis = build_basis(restored, validate_tree(restored, primal.tree.cochord_edges))
    restored_pair = build_projections(restored_basis)
    report.check_matrix("P(dual del dual) = P", restored_pair.P, p.P)
    report.check_matrix("Q(dual del dual) = Q", restored_pair.Q, p.Q)
    return report
