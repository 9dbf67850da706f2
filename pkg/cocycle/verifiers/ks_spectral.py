#!/usr/bin/env python3
"""
Matrices de Kirchhoff-Symanzik K y *K, sus espectros y las identidades que
las relacionan con P, Q y omega.

El teorema espectral se comprueba con polinomios característicos enteros:
se eliminan los factores (x - 1) y se comparan los cocientes; la ausencia de
autovalores en (0, 1) se decide con secuencias de Sturm. Los flotantes sólo
intervienen para localizar autovectores.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence

import numpy as np

from cocycle.config import FLOAT_TOLERANCE, SPANNING_TREE_GUARD, UNIT_EIGENVALUE_WINDOW
from cocycle.core.exceptions import DimensionMismatch, MatrixError
from cocycle.core.linalg import (
    EigenPair,
    IntPolynomial,
    RationalMatrix,
    char_poly,
    float_eig,
    relative_residual,
)
from cocycle.core.reports import VerificationReport
from cocycle.generators.basis import BasisBundle, build_basis
from cocycle.generators.projections import ProjectionPair, build_projections, lambda_matrices
from cocycle.models.graph_models import OrientedGraph, TreeSelection
from cocycle.utils.graph_core import enumerate_spanning_trees


@dataclass(frozen=True)
class KsPair:
    """K: Gramiano de los ciclos (|C| x |C|); Kstar: Gramiano de los cociclos."""

    K: RationalMatrix
    Kstar: RationalMatrix


@dataclass
class SpectralReport:
    """Polinomios característicos exactos, multiplicidades del 1 y autopares flotantes."""

    char_K: IntPolynomial
    char_Kstar: IntPolynomial
    mult1_K: int
    mult1_Kstar: int
    reduced_K: IntPolynomial
    reduced_Kstar: IntPolynomial
    eig_K: List[EigenPair] = field(default_factory=list)
    eig_Kstar: List[EigenPair] = field(default_factory=list)
    report: VerificationReport = field(default_factory=lambda: VerificationReport("Espectros"))

    @property
    def passed(self) -> bool:
        return self.report.passed


def ks_matrices(b: BasisBundle, p: Optional[ProjectionPair] = None) -> KsPair:
    """
    K = C C^T y *K = D D^T. Se comprueba que K es el bloque de cuerdas de
    P^T P y *K el bloque de cocuerdas de Q Q^T.
    """
    C, D = b.cycle_matrix(), b.cocycle_matrix()
    pair = KsPair(C @ C.T, D @ D.T)

    p = p or build_projections(b)
    n, m = b.num_cochords, b.size
    chord_block = (p.P.T @ p.P).submatrix(range(n, m), range(n, m))
    cochord_block = (p.Q @ p.Q.T).submatrix(range(n), range(n))
    if chord_block != pair.K or cochord_block != pair.Kstar:
        raise MatrixError("Los Gramianos no coinciden con los bloques de P^T P y Q Q^T")
    return pair


def spectra_match_mod_one(ks: KsPair, tolerance: float = FLOAT_TOLERANCE) -> SpectralReport:
    """Los espectros de K y *K coinciden salvo la multiplicidad del autovalor 1."""
    char_K, char_Kstar = char_poly(ks.K), char_poly(ks.Kstar)
    reduced_K, mult1_K = char_K.strip_root(1)
    reduced_Kstar, mult1_Kstar = char_Kstar.strip_root(1)

    result = SpectralReport(char_K, char_Kstar, mult1_K, mult1_Kstar, reduced_K, reduced_Kstar,
                            eig_K=float_eig(ks.K), eig_Kstar=float_eig(ks.Kstar))
    report = result.report
    report.check_equal("polinomios reducidos iguales", reduced_K.coefficients, reduced_Kstar.coefficients)
    report.check_equal("K sin autovalores en (0, 1)", char_K.roots_in_open_interval(0, 1), 0)
    report.check_equal("*K sin autovalores en (0, 1)", char_Kstar.roots_in_open_interval(0, 1), 0)
    report.add("K definida positiva", all(x > 0 for x in ks.K.leading_minors()))
    report.add("*K definida positiva", all(x > 0 for x in ks.Kstar.leading_minors()))

    cycles, cochords = ks.K.rows, ks.Kstar.rows
    if cycles == cochords:
        report.check_equal("mismo espectro cuando |E| = 2|V| - 2",
                           char_K.coefficients, char_Kstar.coefficients)
    report.add("multiplicidad de 1 en K >= |C| - (|V| - 1)", mult1_K >= cycles - cochords,
               f"{mult1_K} < {cycles - cochords}")
    report.add("multiplicidad de 1 en *K >= (|V| - 1) - |C|", mult1_Kstar >= cochords - cycles,
               f"{mult1_Kstar} < {cochords - cycles}")

    worst = max((pair.residual for pair in result.eig_K + result.eig_Kstar), default=0.0)
    report.add("residuos de autopares flotantes", worst <= tolerance, f"residuo máximo {worst:.3e}")

    report.values.update({
        'char_K': str(char_K),
        'char_Kstar': str(char_Kstar),
        'mult1_K': mult1_K,
        'mult1_Kstar': mult1_Kstar,
        'eigenvalues_K': [pair.value for pair in result.eig_K],
        'eigenvalues_Kstar': [pair.value for pair in result.eig_Kstar],
    })
    return result


def verify_ks_identities(b: BasisBundle, p: ProjectionPair, ks: KsPair) -> VerificationReport:
    """
    Inversas relacionadas a través de omega, K = 1 + omega^T omega,
    *K = 1 + omega omega^T, P^T P + Q Q^T = I - Omega^2 = (I + Omega)^T (I + Omega)
    y el cambio de base Lambda^{-1} = *Lambda^T con su forma por bloques.
    """
    report = VerificationReport("Identidades de Kirchhoff-Symanzik")
    omega = p.omega_block
    n, c, m = b.num_cochords, b.num_chords, b.size
    I_n, I_c, I_m = RationalMatrix.identity(n), RationalMatrix.identity(c), RationalMatrix.identity(m)

    K_inv, Kstar_inv = ks.K.inverse(), ks.Kstar.inverse()
    report.check_matrix("*K^-1 = 1 - omega K^-1 omega^T", Kstar_inv, I_n - omega @ K_inv @ omega.T)
    report.check_matrix("K^-1 = 1 - omega^T *K^-1 omega", K_inv, I_c - omega.T @ Kstar_inv @ omega)
    report.check_matrix("*K = 1 + omega omega^T", ks.Kstar, I_n + omega @ omega.T)
    report.check_matrix("K = 1 + omega^T omega", ks.K, I_c + omega.T @ omega)

    Omega = p.omega_full
    left = p.P.T @ p.P + p.Q @ p.Q.T
    report.check_matrix("P^T P + Q Q^T = I - Omega^2", left, I_m - Omega @ Omega)
    report.check_matrix("I - Omega^2 = (I + Omega)^T (I + Omega)", I_m - Omega @ Omega,
                        (I_m + Omega).T @ (I_m + Omega))

    lam, star = lambda_matrices(b)
    report.check_matrix("Lambda^-1 = *Lambda^T", lam.inverse(), star.T)
    gram = lam @ lam.T
    report.check_matrix("Lambda Lambda^T = [[1, omega], [omega^T, K]]", gram,
                        RationalMatrix.block([[I_n, omega], [omega.T, ks.K]]))
    report.check_matrix("*Lambda *Lambda^T = (Lambda Lambda^T)^-1", star @ star.T, gram.inverse())
    report.check_matrix("[[*K, -omega], [-omega^T, 1]] = [[1, omega], [omega^T, K]]^-1",
                        RationalMatrix.block([[ks.Kstar, -omega], [-omega.T, I_c]]), gram.inverse())
    report.values['I - Omega^2'] = I_m - Omega @ Omega
    return report


def matrix_tree_check(g: OrientedGraph, ks: KsPair, guard: int = SPANNING_TREE_GUARD) -> VerificationReport:
    """det K = det *K = número de árboles generadores (por fuerza bruta)."""
    report = VerificationReport("Teorema de la matriz-árbol")
    count = enumerate_spanning_trees(g, guard)
    det_K, det_Kstar = ks.K.det(), ks.Kstar.det()
    report.check_equal("det K = #árboles", det_K, count)
    report.check_equal("det *K = #árboles", det_Kstar, count)
    report.values.update({'det_K': det_K, 'det_Kstar': det_Kstar, 'spanning_trees': count})
    return report


# =============================================================================
# TRANSPORTE DE AUTOVECTORES
# =============================================================================

def _close(u: np.ndarray, v: np.ndarray, tolerance: float) -> bool:
    return float(np.linalg.norm(u - v)) <= tolerance * max(1.0, float(np.linalg.norm(v)))


def eigenvector_transport_check(b: BasisBundle, p: ProjectionPair, ks: KsPair,
                                tolerance: float = FLOAT_TOLERANCE,
                                unit_window: float = UNIT_EIGENVALUE_WINDOW) -> VerificationReport:
    """
    Para cada autopar (lambda, w) de P^T P con lambda > 1, la parte de cuerdas
    de w es autovector de K y la parte de cocuerdas de P w lo es de *K. Para
    lambda = 1, P w = P^T w = w. Lo mismo, con papeles intercambiados, para Q Q^T.
    """
    report = VerificationReport("Transporte de autovectores")
    n, m = b.num_cochords, b.size
    P, Q = p.P.to_numpy(), p.Q.to_numpy()
    K, Kstar = ks.K.to_numpy(), ks.Kstar.to_numpy()

    def check_side(label: str, gram: RationalMatrix, proj: np.ndarray, own_block: np.ndarray,
                   own_slice: slice, other_block: np.ndarray, other_slice: slice,
                   transported) -> None:
        transported_count = unit_count = 0
        for pair in float_eig(gram):
            w = np.array(pair.vector)
            if abs(pair.value - 1) <= unit_window:
                unit_count += 1
                ok = _close(proj @ w, w, tolerance) and _close(proj.T @ w, w, tolerance)
                report.add(f"{label}: lambda = 1 fija w por ambas proyecciones", ok,
                           f"lambda = {pair.value:.6f}")
            elif pair.value > 1 + unit_window:
                transported_count += 1
                own = w[own_slice]
                other = transported(w)[other_slice]
                r_own = relative_residual(own_block, pair.value, own)
                r_other = relative_residual(other_block, pair.value, other)
                report.add(f"{label}: lambda = {pair.value:.6f} es autovalor de ambos Gramianos",
                           r_own <= tolerance and r_other <= tolerance,
                           f"residuos {r_own:.3e}, {r_other:.3e}")
        report.values[f'{label}_transported'] = transported_count
        report.values[f'{label}_unit'] = unit_count

    check_side("P^T P", p.P.T @ p.P, P, K, slice(n, m), Kstar, slice(0, n), lambda w: P @ w)
    check_side("Q Q^T", p.Q @ p.Q.T, Q, Kstar, slice(0, n), K, slice(n, m), lambda w: Q.T @ w)
    return report


def exact_transport_check(b: BasisBundle, p: ProjectionPair, ks: KsPair,
                          vector: Sequence, eigenvalue, side: str = "P") -> VerificationReport:
    """
    Versión exacta del transporte para un autovector racional dado.

    side="P": P^T P w = lambda w; K w_cuerdas = lambda w_cuerdas y
    *K (P w)_cocuerdas = lambda (P w)_cocuerdas; con lambda = 1, P w = P^T w = w.
    side="Q": simétrico con Q Q^T, *K sobre w_cocuerdas y K sobre (Q^T w)_cuerdas.
    """
    if len(vector) != b.size:
        raise DimensionMismatch(f"Vector de longitud {len(vector)} para |E| = {b.size}")
    report = VerificationReport(f"Transporte exacto ({side})")
    n, m = b.num_cochords, b.size
    lam = Fraction(eigenvalue)
    w = RationalMatrix.from_rows([[x] for x in vector], cols=1)

    if side == "P":
        gram, proj = p.P.T @ p.P, p.P
        own_block, own_rows = ks.K, range(n, m)
        other_block, other_rows, moved = ks.Kstar, range(n), p.P @ w
    else:
        gram, proj = p.Q @ p.Q.T, p.Q
        own_block, own_rows = ks.Kstar, range(n)
        other_block, other_rows, moved = ks.K, range(n, m), p.Q.T @ w

    report.check_matrix("w es autovector del Gramiano", gram @ w, w.scale(lam))
    own = w.submatrix(own_rows, [0])
    other = moved.submatrix(other_rows, [0])
    report.check_matrix("parte propia es autovector", own_block @ own, own.scale(lam))
    report.check_matrix("parte transportada es autovector", other_block @ other, other.scale(lam))
    if lam == 1:
        report.check_matrix("proyección fija w", proj @ w, w)
        report.check_matrix("proyección traspuesta fija w", proj.T @ w, w)
    report.values.update({'own_part': own.column(0), 'transported_part': other.column(0)})
    return report


# =============================================================================
# CAMBIO DE ÁRBOL
# =============================================================================

def tree_change_report(g: OrientedGraph, t1: TreeSelection, t2: TreeSelection) -> VerificationReport:
    """
    S_{a b} = valor del nuevo ciclo a sobre la cuerda antigua b. Se comprueba
    S C_viejo = C_nuevo, K_nuevo = S K_viejo S^T y |det S| = 1; el signo se anota.
    """
    report = VerificationReport("Cambio de árbol")
    old, new = build_basis(g, t1), build_basis(g, t2)
    old_C = RationalMatrix.from_rows([old.to_user_order(v) for v in old.cycle_vectors], cols=g.num_edges)
    new_C = RationalMatrix.from_rows([new.to_user_order(v) for v in new.cycle_vectors], cols=g.num_edges)
    old_chords = [g.edge_index(e) for e in t1.chord_edges]
    S = new_C.submatrix(range(new_C.rows), old_chords)

    K_old, K_new = ks_matrices(old).K, ks_matrices(new).K
    report.check_matrix("S C_viejo = C_nuevo", S @ old_C, new_C)
    report.check_matrix("K_nuevo = S K_viejo S^T", K_new, S @ K_old @ S.T)
    det_S = S.det()
    report.check_equal("|det S| = 1", abs(det_S), 1)
    report.check_equal("det K invariante", K_new.det(), K_old.det())
    if det_S == -1:
        report.note("det S = -1: el cambio de árbol invierte la orientación de la base de ciclos")

    char_old, char_new = char_poly(K_old), char_poly(K_new)
    spectra_differ = char_old != char_new
    if spectra_differ:
        report.note(f"El espectro cambia: {char_old} -> {char_new}")
    report.values.update({
        'S': S,
        'det_S': det_S,
        'K_old': K_old,
        'K_new': K_new,
        'char_old': str(char_old),
        'char_new': str(char_new),
        'spectra_differ': spectra_differ,
    })
    return report
