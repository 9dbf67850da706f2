"""
Tests de los generadores aleatorios y de la suite de propiedades.
"""

import os
import sys

import numpy as np

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from cocycle.generators.random_graphs import (
    loop_family_graph,
    random_connected_multigraph,
    random_simple_graph,
    random_spanning_tree,
    random_state,
)
from cocycle.verifiers.suite import CASE_FAMILIES, SuiteOptions, run_random_suite

SMALL = SuiteOptions(max_v=5, max_e=7, lab_max_n=4)


def test_multigraph_sizes():
    rng = np.random.default_rng(1)
    for _ in range(30):
        g = random_connected_multigraph(rng, max_v=6, max_e=9)
        assert 1 <= g.num_vertices <= 6
        assert 1 <= g.num_edges <= 9
        assert g.num_edges >= g.num_vertices - 1


def test_simple_graphs_are_simple():
    rng = np.random.default_rng(2)
    for _ in range(30):
        g = random_simple_graph(rng, max_v=6, max_e=9)
        assert g.is_simple()
        assert g.num_vertices >= 2


def test_loop_family():
    rng = np.random.default_rng(3)
    for _ in range(10):
        g = loop_family_graph(rng, max_v=5)
        t = random_spanning_tree(g, rng)
        assert all(g.edge(e).is_loop for e in t.chord_edges)


def test_random_spanning_tree():
    rng = np.random.default_rng(4)
    g = random_connected_multigraph(rng, max_v=6, max_e=10)
    t = random_spanning_tree(g, rng)
    assert len(t.cochord_edges) == g.num_vertices - 1
    assert len(t.chord_edges) == g.cyclomatic_number


def test_random_state():
    rng = np.random.default_rng(5)
    state = random_state(rng, 6, entry_range=2, max_denominator=3)
    assert len(state.currents) == len(state.forces) == 6
    assert all(abs(x) <= 2 and x.denominator <= 3 for x in state.currents + state.forces)


def test_small_suite_passes():
    report = run_random_suite(cases=4, seed=0, options=SMALL)
    assert report.passed, report.failures
    assert report.values['checks'] == 4 * len(CASE_FAMILIES)
    assert report.checks[0].name.startswith("[caso 1]")


def test_default_suite_passes():
    """200 casos con las opciones por defecto (unos 40 s)."""
    report = run_random_suite(cases=200, seed=0)
    assert report.passed, report.failures[:3]
    assert report.values['cases'] == 200
    assert report.values['checks'] == 200 * len(CASE_FAMILIES)
    for name, _ in CASE_FAMILIES:
        assert sum(1 for c in report.checks if c.name.endswith(f"] {name}")) == 200


def test_suite_is_deterministic():
    first = run_random_suite(cases=3, seed=42, options=SMALL)
    second = run_random_suite(cases=3, seed=42, options=SMALL)
    assert first.to_dict() == second.to_dict()


def test_progress_callback():
    seen = []
    run_random_suite(cases=2, seed=9, options=SMALL, progress=lambda k, total: seen.append((k, total)))
    assert seen == [(1, 2), (2, 2)]
