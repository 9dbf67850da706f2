"""
Tests del laboratorio de proyecciones oblicuas abstractas.
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from cocycle.core.exceptions import NotSquare, PreconditionViolation
from cocycle.core.linalg import RationalMatrix
from cocycle.generators.oblique_pairs import pair_from_projection, random_oblique_projection
from cocycle.tests.fixtures import analyzed, square_doc
from cocycle.verifiers.projection_lab import verify_projection_theorems


def _raises(exc_type, func, *args, **kwargs):
    try:
        func(*args, **kwargs)
    except exc_type:
        return True
    return False


def test_graph_induced_pair():
    _, p, _ = analyzed(square_doc())
    report = verify_projection_theorems(pair_from_projection(p.P))
    assert report.passed, report.failures
    assert report.values['d'] == 1
    assert report.values['r0'] == 3
    assert report.values['r1'] == 0
    assert report.values['orthogonal'] is False


def test_complementary_pair():
    _, p, _ = analyzed(square_doc())
    pair = pair_from_projection(p.Q)
    assert pair.rank_P == 3
    assert pair.Q == p.P
    report = verify_projection_theorems(pair)
    assert report.passed
    # Q^T Q del cuadrado tiene espectro {0, 0, 1, 2, 4}
    assert report.values['r0'] == 2
    assert report.values['r1'] == 1


def test_orthogonal_pair():
    P = RationalMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 0]])
    report = verify_projection_theorems(pair_from_projection(P))
    assert report.passed
    assert report.values['r1'] == 2
    assert report.values['orthogonal'] is True


def test_random_pairs():
    small = random_oblique_projection(2, 1, seed=7)
    assert small.rank_P == 1
    assert sum(small.P.entry(i, i) for i in range(2)) == 1
    assert verify_projection_theorems(small).passed

    larger = random_oblique_projection(5, 2, seed=11)
    assert larger.rank_P == 2
    assert larger.P @ larger.P == larger.P
    assert verify_projection_theorems(larger).passed


def test_random_pairs_are_seeded():
    first = random_oblique_projection(4, 2, seed=3)
    second = random_oblique_projection(4, 2, seed=3)
    assert first.P == second.P


def test_preconditions():
    assert _raises(PreconditionViolation, random_oblique_projection, 3, 0, seed=1)
    assert _raises(PreconditionViolation, random_oblique_projection, 3, 3, seed=1)
    assert _raises(PreconditionViolation, pair_from_projection, RationalMatrix.from_rows([[1, 1], [0, 2]]))
    assert _raises(NotSquare, pair_from_projection, RationalMatrix.zeros(2, 3))
