"""
Tests de redes termodinámicas: observables macroscópicos, Kirchhoff,
producción de entropía, régimen lineal y conjugación canónica.
"""

import os
import sys
from fractions import Fraction

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from cocycle.core.exceptions import DimensionMismatch, DocumentError, UnknownEdge
from cocycle.core.linalg import RationalMatrix
from cocycle.models.graph_models import ThermoState, load_state, read_document
from cocycle.tests.fixtures import analyzed, fixture_path, loop_doc, square_doc, tri_doc
from cocycle.verifiers.thermo import (
    entropy_production,
    kirchhoff_checks,
    linear_regime_epr,
    macroscopic_observables,
    orthogonal_projectors,
    reconstruct_state,
    verify_lambda_duality,
)


def _raises(exc_type, func, *args):
    try:
        func(*args)
    except exc_type:
        return True
    return False


def _state(name, b):
    return load_state(read_document(fixture_path(name)), b.graph, b.tree)


def test_cycle_state_observables():
    b, _, _ = analyzed(square_doc())
    obs = macroscopic_observables(b, _state("state_c4.json", b))
    assert obs.J_mu == (0, 0, 0)
    assert obs.J_alpha == (1, 0)
    assert obs.F_mu == (0, 1, 1)
    assert obs.F_alpha == (3, -1)
    assert obs.to_dict()['F_alpha'] == ['3', '-1']


def test_cycle_state_kirchhoff_and_entropy():
    b, p, _ = analyzed(square_doc())
    state = _state("state_c4.json", b)
    report = kirchhoff_checks(b, p, state)
    assert report.passed
    assert report.values['kcl'] is True
    assert report.values['kvl'] is False
    assert report.values['equilibrium'] is False

    epr = entropy_production(b, state)
    assert epr.sigma == 3
    assert epr.vortex_part == 3
    assert epr.tidal_part == 0


def test_single_edge_state():
    b, p, ks = analyzed(square_doc())
    state = _state("state_e1.json", b)
    obs = macroscopic_observables(b, state)
    assert obs.J_mu == (1, 0, 0)
    assert obs.F_alpha == (0, 1)
    assert kirchhoff_checks(b, p, state).values['kcl'] is False

    epr = entropy_production(b, state)
    assert (epr.sigma, epr.tidal_part, epr.vortex_part) == (1, 1, 0)

    linear = linear_regime_epr(b, ks, state.currents)
    assert linear.passed
    assert linear.values['tidal'] == Fraction(5, 8)
    assert linear.values['vortex'] == Fraction(3, 8)
    assert linear.values['sigma'] == 1


def test_zero_state_is_equilibrium():
    b, p, _ = analyzed(square_doc())
    state = _state("state_zero.json", b)
    assert state == ThermoState.zero(5)
    report = kirchhoff_checks(b, p, state)
    assert report.values['equilibrium'] is True
    assert entropy_production(b, state).sigma == 0


def test_rational_state_round_trip():
    b, _, _ = analyzed(square_doc())
    state = load_state({
        "currents": {"e1": "1/2", "e4": -3, "e5": "2/7"},
        "forces": {"e2": "-5/3", "e3": 4, "e5": 1},
    }, b.graph, b.tree)
    assert state.currents[0] == Fraction(1, 2)
    assert reconstruct_state(b, macroscopic_observables(b, state)) == state
    epr = entropy_production(b, state)
    assert epr.sigma == epr.tidal_part + epr.vortex_part


def test_linear_regime_on_all_fixtures():
    for doc in (square_doc, tri_doc, loop_doc):
        b, _, ks = analyzed(doc())
        current = tuple(Fraction(k + 1, 3) for k in range(b.size))
        assert linear_regime_epr(b, ks, current).passed


def test_orthogonal_projectors():
    b, _, ks = analyzed(square_doc())
    result = orthogonal_projectors(b, ks)
    assert result.report.passed, result.report.failures
    c4 = b.cycle("e4")
    assert result.Pprime.apply(c4) == c4
    assert result.Qprime.apply(c4) == (0, 0, 0, 0, 0)


def test_lambda_duality():
    b, _, _ = analyzed(square_doc())
    assert verify_lambda_duality(b).passed
    report = verify_lambda_duality(b, _state("state_c4.json", b))
    assert report.passed
    assert len(report.checks) == 4


def test_state_errors():
    b, p, ks = analyzed(square_doc())
    assert _raises(UnknownEdge, load_state, {"currents": {"e9": 1}}, b.graph, b.tree)
    assert _raises(DocumentError, load_state, {"currents": {"e1": 0.5}}, b.graph, b.tree)
    assert _raises(DocumentError, load_state, {"forces": {"e1": "1/0"}}, b.graph, b.tree)
    assert _raises(DocumentError, load_state, {"forces": {"e1": True}}, b.graph, b.tree)
    assert _raises(DocumentError, load_state, {"forces": [1, 2]}, b.graph, b.tree)

    short = ThermoState.zero(3)
    assert _raises(DimensionMismatch, kirchhoff_checks, b, p, short)
    assert _raises(DimensionMismatch, linear_regime_epr, b, ks, (1, 2))


def test_state_to_dict_uses_canonical_order():
    b, _, _ = analyzed(tri_doc())
    state = ThermoState.from_mappings(b.tree, {"e3": Fraction(1, 2)}, {})
    assert state.to_dict(b.tree)['currents'] == {"e1": "0", "e2": "0", "e3": "1/2"}
    assert RationalMatrix.from_rows([state.currents]).cols == 3
