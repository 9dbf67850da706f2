"""
Tests de dualidad planar: trazado de caras, grafo dual, *P = Q^T,
*Q = P^T y dual del dual.
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from cocycle.core.exceptions import BadFaces, BadRotation, EulerViolation
from cocycle.models.graph_models import PlanarEmbedding
from cocycle.tests.fixtures import analyzed, edge_doc, square_doc, tri_doc
from cocycle.verifiers.duality import (
    dual_graph,
    dual_of_dual_check,
    euler_characteristic,
    faces_to_rotations,
    reverse_dual,
    trace_faces,
    verify_duality,
)

PLANAR_DOCS = (square_doc, tri_doc, edge_doc)


def _raises(exc_type, func, *args):
    try:
        func(*args)
    except exc_type:
        return True
    return False


def _dual(doc):
    b, p, _ = analyzed(doc)
    return b, p, dual_graph(doc.graph, doc.embedding, b.tree)


def test_faces_square():
    doc = square_doc()
    faces = trace_faces(doc.graph, doc.embedding.rotations)
    assert faces == [
        ("-e1", "-e5", "-e3", "-e4"),
        ("e1", "-e2", "e5"),
        ("e2", "e4", "e3"),
    ]
    assert euler_characteristic(doc.graph, faces) == 2


def test_faces_small():
    tri = tri_doc()
    assert trace_faces(tri.graph, tri.embedding.rotations) == [("-e1", "-e3", "-e2"), ("e1", "e2", "e3")]
    edge = edge_doc()
    assert trace_faces(edge.graph, edge.embedding.rotations) == [("-e1", "e1")]


def test_dual_graph_square():
    _, _, dual = _dual(square_doc())
    g = dual.dual_graph
    assert g.vertices == ("f1", "f2", "f3")
    arrows = {e.id: (e.tail, e.head) for e in g.edges}
    assert arrows == {
        "e1": ("f1", "f2"),
        "e2": ("f2", "f3"),
        "e3": ("f1", "f3"),
        "e4": ("f1", "f3"),
        "e5": ("f1", "f2"),
    }
    assert dual.dual_tree.tree_edges == frozenset({"e4", "e5"})
    assert dual.edge_bijection["e3"] == "e3"
    assert not dual.flipped


def test_dual_graph_small():
    _, _, tri = _dual(tri_doc())
    assert all((e.tail, e.head) == ("f1", "f2") for e in tri.dual_graph.edges)
    assert tri.dual_tree.tree_edges == frozenset({"e3"})

    _, _, edge = _dual(edge_doc())
    assert edge.dual_graph.vertices == ("f1",)
    assert edge.dual_graph.edge("e1").is_loop
    assert edge.dual_tree.tree_edges == frozenset()


def test_verify_duality():
    for doc in PLANAR_DOCS:
        b, p, dual = _dual(doc())
        report = verify_duality(b, p, dual)
        assert report.passed, (doc.__name__, report.failures)


def test_dual_projections_are_transposes():
    b, p, dual = _dual(square_doc())
    report = verify_duality(b, p, dual)
    Q = b.matrix_to_user_order(p.Q)
    assert report.values['dual_P'] == Q.T


def test_dual_of_dual():
    for doc in PLANAR_DOCS:
        b, p, dual = _dual(doc())
        report = dual_of_dual_check(b, p, dual)
        assert report.passed, (doc.__name__, report.failures)


def test_reverse_dual():
    _, _, dual = _dual(square_doc())
    flipped = reverse_dual(dual)
    assert flipped.flipped
    assert flipped.dual_graph.edge("e2").tail == "f3"
    assert reverse_dual(flipped).dual_graph == dual.dual_graph


def test_faces_to_rotations_round_trip():
    doc = square_doc()
    faces = trace_faces(doc.graph, doc.embedding.rotations)
    rotations = faces_to_rotations(doc.graph, faces)
    assert trace_faces(doc.graph, rotations) == faces

    from_faces = PlanarEmbedding(faces=tuple(faces))
    b, _, _ = analyzed(doc)
    dual = dual_graph(doc.graph, from_faces, b.tree)
    assert dual.faces == faces


def test_bad_rotations():
    doc = square_doc()
    rotations = dict(doc.embedding.rotations)
    rotations["v1"] = ("e1",)
    assert _raises(BadRotation, trace_faces, doc.graph, rotations)

    rotations = dict(doc.embedding.rotations)
    rotations["v1"] = ("e1", "-e5", "e3")
    assert _raises(BadRotation, trace_faces, doc.graph, rotations)

    rotations = dict(doc.embedding.rotations)
    rotations["v9"] = ()
    assert _raises(BadRotation, trace_faces, doc.graph, rotations)


def test_bad_faces():
    doc = square_doc()
    assert _raises(BadFaces, faces_to_rotations, doc.graph, [("e1", "-e2", "e5")])
    assert _raises(BadFaces, faces_to_rotations, doc.graph, [("e1", "e2")])


def test_non_planar_rotation():
    doc = square_doc()
    rotations = dict(doc.embedding.rotations)
    rotations["v2"] = ("-e1", "e4", "-e2")
    assert len(trace_faces(doc.graph, rotations)) == 1
    b, _, _ = analyzed(doc)
    assert _raises(EulerViolation, dual_graph, doc.graph, PlanarEmbedding(rotations=rotations), b.tree)
