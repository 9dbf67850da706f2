"""
Tests del puente con el Laplaciano: Delta, grafo cono y *K(cono) = Delta + 1.
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from cocycle.core.exceptions import NotSimple
from cocycle.core.linalg import RationalMatrix
from cocycle.models.graph_models import Edge, OrientedGraph
from cocycle.tests.fixtures import loop_doc, square_doc, tri_doc
from cocycle.verifiers.laplacian import cone_augment, laplacian, laplacian_shift_check


def _raises(exc_type, func, *args):
    try:
        func(*args)
    except exc_type:
        return True
    return False


def test_laplacian_square():
    expected = RationalMatrix.from_rows([
        [2, -1, -1, 0],
        [-1, 3, -1, -1],
        [-1, -1, 3, -1],
        [0, -1, -1, 2],
    ])
    assert laplacian(square_doc().graph) == expected


def test_laplacian_triangle():
    expected = RationalMatrix.from_rows([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]])
    assert laplacian(tri_doc().graph) == expected


def test_cone_augment():
    g = tri_doc().graph
    cone = cone_augment(g)
    assert cone.apex == "v0"
    assert cone.augmented.vertices[0] == "v0"
    assert cone.augmented.num_edges == 6
    assert cone.augmented.edge("v0->v2").tail == "v0"
    assert cone.star_tree.cochord_edges == ("v0->v1", "v0->v2", "v0->v3")
    assert cone.vertex_map == {"v1": 0, "v2": 1, "v3": 2}


def test_cone_apex_collision():
    g = OrientedGraph(["v0", "v1"], [Edge("e1", "v0", "v1")])
    cone = cone_augment(g)
    assert cone.apex == "v0'"
    assert cone.augmented.num_vertices == 3


def test_shift_check_passes():
    for doc in (square_doc, tri_doc):
        report = laplacian_shift_check(doc().graph)
        assert report.passed, (doc.__name__, report.failures)


def test_shift_check_values():
    report = laplacian_shift_check(tri_doc().graph)
    delta = report.values['laplacian']
    assert report.values['cone_Kstar'] == delta + RationalMatrix.identity(3)
    # det(Delta + 1) del triángulo = 16 árboles en K4
    assert report.values['cone_spanning_trees'] == 16
    assert report.get("Delta + 1 definida positiva").passed
    assert report.values['shifted_minors'] == [3, 8, 16]


def test_shift_check_guard():
    report = laplacian_shift_check(square_doc().graph, guard=5)
    assert report.passed
    assert 'cone_spanning_trees' not in report.values
    assert report.notes


def test_requires_simple_graph():
    assert _raises(NotSimple, laplacian, loop_doc().graph)
    parallel = OrientedGraph(["a", "b"], [Edge("e1", "a", "b"), Edge("e2", "b", "a")])
    assert _raises(NotSimple, laplacian_shift_check, parallel)
