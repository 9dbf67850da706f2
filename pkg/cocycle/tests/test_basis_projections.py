"""
Tests de la base de ciclos/cociclos fundamentales y de las proyecciones
complementarias P, Q con su 2-forma Omega.
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from cocycle.core.exceptions import NotAChord, NotACochord
from cocycle.core.linalg import RationalMatrix
from cocycle.generators.basis import build_basis, fundamental_cocycle, fundamental_cycle, verify_basis
from cocycle.generators.projections import (
    build_projections,
    lambda_matrices,
    verify_projection_identities,
    verify_two_form,
)
from cocycle.tests.fixtures import analyzed, edge_doc, loop_doc, square_doc, tri_doc
from cocycle.utils.graph_core import validate_tree

P_SQUARE = RationalMatrix.from_rows([
    [0, 0, 0, 0, 1],
    [0, 0, 0, 1, -1],
    [0, 0, 0, 1, 0],
    [0, 0, 0, 1, 0],
    [0, 0, 0, 0, 1],
])

Q_SQUARE = RationalMatrix.from_rows([
    [1, 0, 0, 0, -1],
    [0, 1, 0, -1, 1],
    [0, 0, 1, -1, 0],
    [0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0],
])

OMEGA_SQUARE = RationalMatrix.from_rows([
    [0, 0, 0, 0, 1],
    [0, 0, 0, 1, -1],
    [0, 0, 0, 1, 0],
    [0, -1, -1, 0, 0],
    [-1, 1, 0, 0, 0],
])


def _raises(exc_type, func, *args):
    try:
        func(*args)
    except exc_type:
        return True
    return False


def test_fundamental_cycles_square():
    b, _, _ = analyzed(square_doc())
    assert b.cycle("e4") == (0, 1, 1, 1, 0)
    assert b.cycle("e5") == (1, -1, 0, 0, 1)


def test_fundamental_cocycles_square():
    b, _, _ = analyzed(square_doc())
    assert b.cocycle("e1") == (1, 0, 0, 0, -1)
    assert b.cocycle("e2") == (0, 1, 0, -1, 1)
    assert b.cocycle("e3") == (0, 0, 1, -1, 0)


def test_small_bases():
    tri, _, _ = analyzed(tri_doc())
    assert tri.cycle_vectors == ((1, 1, 1),)
    assert tri.cocycle_vectors == ((1, 0, -1), (0, 1, -1))

    edge, _, _ = analyzed(edge_doc())
    assert edge.cycle_vectors == ()
    assert edge.cocycle_vectors == ((1,),)

    loop, _, _ = analyzed(loop_doc())
    assert loop.cycle("e2") == (0, 1)
    assert loop.cocycle("e1") == (1, 0)


def test_cycle_with_other_tree():
    g = tri_doc().graph
    t = validate_tree(g, ["e1", "e3"])
    assert fundamental_cycle(g, t, "e2") == (1, 1, 1)
    assert _raises(NotAChord, fundamental_cycle, g, t, "e1")
    assert _raises(NotACochord, fundamental_cocycle, g, t, "e2")


def test_verify_basis_passes():
    for doc in (square_doc(), tri_doc(), edge_doc(), loop_doc()):
        b, _, _ = analyzed(doc)
        report = verify_basis(b)
        assert report.passed, report.failures


def test_projection_matrices_square():
    _, p, _ = analyzed(square_doc())
    assert p.P == P_SQUARE
    assert p.Q == Q_SQUARE
    assert p.omega_full == OMEGA_SQUARE
    assert p.omega_block == RationalMatrix.from_rows([[0, 1], [1, -1], [1, 0]])


def test_projection_identities_pass():
    for doc in (square_doc(), tri_doc(), edge_doc(), loop_doc()):
        b, p, _ = analyzed(doc)
        report = verify_projection_identities(p, b)
        assert report.passed, report.failures
        assert verify_two_form(b, p).passed


def test_orthogonal_class():
    _, p, _ = analyzed(loop_doc())
    assert p.P == RationalMatrix.from_rows([[0, 0], [0, 1]])
    assert p.Q == RationalMatrix.from_rows([[1, 0], [0, 0]])
    assert p.omega_full.is_zero()
    assert verify_projection_identities(p).values['orthogonal'] is True

    _, square, _ = analyzed(square_doc())
    assert verify_projection_identities(square).values['orthogonal'] is False


def test_edge_projections():
    _, p, _ = analyzed(edge_doc())
    assert p.P == RationalMatrix.from_rows([[0]])
    assert p.Q == RationalMatrix.from_rows([[1]])


def test_failed_identity_reports_counterexample():
    b, p, _ = analyzed(square_doc())
    broken = p.__class__(P_SQUARE, RationalMatrix.identity(5), p.omega_full, p.omega_block)
    report = verify_projection_identities(broken, b)
    assert not report.passed
    check = report.get("P + Q = I")
    assert check is not None and not check.passed
    assert check.counterexample == (0, 4)


def test_lambda_matrices():
    b = build_basis(square_doc().graph, validate_tree(square_doc().graph, ["e1", "e2", "e3"]))
    lam, star = lambda_matrices(b)
    assert lam.row(3) == (0, 1, 1, 1, 0)
    assert star.row(0) == (1, 0, 0, 0, -1)
    assert lam @ star.T == RationalMatrix.identity(5)
    assert build_projections(b).P == P_SQUARE
