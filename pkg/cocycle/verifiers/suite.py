#!/usr/bin/env python3
"""
Suite de propiedades aleatoria.

Cada caso genera con la misma semilla un multigrafo conexo, un miembro de la
familia de lazos, un grafo simple para el puente con el Laplaciano y un par de
proyecciones oblicuas abstractas, y ejecuta sobre ellos todas las
verificaciones. Los casos se ejecutan en orden; para una semilla fija el
informe es idéntico.
"""

from dataclasses import dataclass
from typing import Callable, List, Optional

import numpy as np

from cocycle.config import (
    FLOAT_TOLERANCE,
    GENERATION_RETRIES,
    RANDOM_SUITE_DEFAULTS,
    SPANNING_TREE_GUARD,
    UNIT_EIGENVALUE_WINDOW,
)
from cocycle.core.exceptions import CocycleError
from cocycle.core.reports import VerificationReport
from cocycle.generators.basis import build_basis, verify_basis
from cocycle.generators.oblique_pairs import random_oblique_projection
from cocycle.generators.projections import build_projections, verify_projection_identities, verify_two_form
from cocycle.generators.random_graphs import (
    loop_family_graph,
    random_connected_multigraph,
    random_simple_graph,
    random_spanning_tree,
    random_state,
)
from cocycle.verifiers.projection_lab import verify_projection_theorems
from cocycle.verifiers.ks_spectral import (
    eigenvector_transport_check,
    ks_matrices,
    matrix_tree_check,
    spectra_match_mod_one,
    tree_change_report,
    verify_ks_identities,
)
from cocycle.verifiers.laplacian import laplacian_shift_check
from cocycle.verifiers.thermo import (
    entropy_production,
    kirchhoff_checks,
    linear_regime_epr,
    orthogonal_projectors,
    verify_lambda_duality,
)

# Límite de aristas del cono para contar sus árboles dentro de la suite
CONE_COUNT_GUARD = 16

ProgressCallback = Callable[[int, int], None]


@dataclass(frozen=True)
class SuiteOptions:
    """Parámetros de generación y tolerancias de la suite."""

    max_v: int = RANDOM_SUITE_DEFAULTS['max_v']
    max_e: int = RANDOM_SUITE_DEFAULTS['max_e']
    lab_max_n: int = RANDOM_SUITE_DEFAULTS['lab_max_n']
    entry_range: int = RANDOM_SUITE_DEFAULTS['entry_range']
    max_denominator: int = RANDOM_SUITE_DEFAULTS['max_denominator']
    tolerance: float = FLOAT_TOLERANCE
    unit_window: float = UNIT_EIGENVALUE_WINDOW
    spanning_tree_guard: int = SPANNING_TREE_GUARD
    generation_retries: int = GENERATION_RETRIES


def _summarize(report: VerificationReport, name: str, parts: List[VerificationReport]) -> None:
    """Condensa varios informes en una sola comprobación con el primer fallo."""
    for part in parts:
        for check in part.checks:
            if not check.passed:
                report.add(name, False, f"{part.title} / {check.name}: {check.detail}", check.counterexample)
                return
    report.add(name, True)


def _graph_case(rng: np.random.Generator, opts: SuiteOptions) -> List[VerificationReport]:
    g = random_connected_multigraph(rng, opts.max_v, opts.max_e)
    t = random_spanning_tree(g, rng)
    b = build_basis(g, t)
    p = build_projections(b)
    ks = ks_matrices(b, p)
    state = random_state(rng, b.size, opts.entry_range, opts.max_denominator)

    parts = [
        verify_basis(b),
        verify_projection_identities(p, b),
        verify_two_form(b, p),
        spectra_match_mod_one(ks, opts.tolerance).report,
        verify_ks_identities(b, p, ks),
        eigenvector_transport_check(b, p, ks, opts.tolerance, opts.unit_window),
        kirchhoff_checks(b, p, state),
        linear_regime_epr(b, ks, state.currents),
        orthogonal_projectors(b, ks).report,
        verify_lambda_duality(b, state),
        tree_change_report(g, t, random_spanning_tree(g, rng)),
    ]
    if g.num_edges <= opts.spanning_tree_guard:
        parts.append(matrix_tree_check(g, ks, opts.spanning_tree_guard))
    # Lanza ArithmeticError si la descomposición no cuadra
    entropy_production(b, state)
    return parts


def _loop_case(rng: np.random.Generator, opts: SuiteOptions) -> List[VerificationReport]:
    g = loop_family_graph(rng, opts.max_v)
    b = build_basis(g, random_spanning_tree(g, rng))
    p = build_projections(b)
    report = VerificationReport("Familia de lazos")
    report.add("Omega = 0", p.omega_full.is_zero())
    report.check_matrix("P^T = P", p.P.T, p.P)
    return [report, verify_projection_identities(p, b)]


def _laplacian_case(rng: np.random.Generator, opts: SuiteOptions) -> List[VerificationReport]:
    g = random_simple_graph(rng, opts.max_v, opts.max_e)
    return [laplacian_shift_check(g, guard=min(CONE_COUNT_GUARD, opts.spanning_tree_guard))]


def _lab_case(rng: np.random.Generator, opts: SuiteOptions) -> List[VerificationReport]:
    n = int(rng.integers(2, max(2, opts.lab_max_n) + 1))
    k = int(rng.integers(1, n))
    pair = random_oblique_projection(n, k, seed=int(rng.integers(0, 2 ** 31)),
                                     entry_range=opts.entry_range, retries=opts.generation_retries)
    return [verify_projection_theorems(pair, opts.tolerance, opts.unit_window)]


CASE_FAMILIES = (
    ("grafo", _graph_case),
    ("familia de lazos", _loop_case),
    ("Laplaciano", _laplacian_case),
    ("proyecciones oblicuas", _lab_case),
)


def run_random_suite(cases: int = RANDOM_SUITE_DEFAULTS['cases'],
                     seed: int = RANDOM_SUITE_DEFAULTS['seed'],
                     options: Optional[SuiteOptions] = None,
                     progress: Optional[ProgressCallback] = None) -> VerificationReport:
    """
    Ejecuta ``cases`` casos; cada uno aporta una comprobación por familia con
    el prefijo ``[caso k]`` y el primer fallo como detalle.
    """
    opts = options or SuiteOptions()
    report = VerificationReport(f"Suite aleatoria (casos={cases}, semilla={seed})")
    rng = np.random.default_rng(seed)

    for index in range(1, cases + 1):
        if progress is not None:
            progress(index, cases)
        for name, run in CASE_FAMILIES:
            label = f"[caso {index}] {name}"
            try:
                _summarize(report, label, run(rng, opts))
            except (CocycleError, ArithmeticError) as e:
                report.add(label, False, f"{type(e).__name__}: {e}")

    report.values.update({'cases': cases, 'seed': seed, 'checks': len(report.checks)})
    return report
