"""
Laboratorio de proyecciones oblicuas en espacios abstractos.

Para un par P, Q = I - P se comprueba de forma exacta que PᵀP y QᵀQ no tienen
autovalores en (0, 1), que coinciden fuera de 0 y 1, el balance de
multiplicidades de 0 y 1, que σ(PᵀP) = σ(PPᵀ) y que el autoespacio de 1
es {w : P w = Pᵀ w = w}. Sólo la localización de autovectores usa flotantes.
"""

from math import lcm

import numpy as np

from cocycle.config import FLOAT_TOLERANCE, UNIT_EIGENVALUE_WINDOW
from cocycle.core.linalg import RationalMatrix, char_poly, float_eig
from cocycle.core.reports import VerificationReport
from cocycle.generators.oblique_pairs import ObliquePair


def verify_projection_theorems(pair: ObliquePair,
                             tolerance: float = FLOAT_TOLERANCE,
                             unit_window: float = UNIT_EIGENVALUE_WINDOW) -> VerificationReport:
    """
    Las matrices se escalan por el mínimo común denominador d de PᵀP, QᵀQ y
    PPᵀ; en los polinomios escalados el papel del autovalor 1 lo hace d.
    """
    report = VerificationReport(f"Proyecciones oblicuas (n={pair.n}, rango={pair.rank_P})")
    n, P, Q = pair.n, pair.P, pair.Q
    PtP = P.T @ P
    QtQ = Q.T @ Q
    PPt = P @ P.T

    report.check_matrix("P^2 = P", P @ P, P)
    report.check_matrix("Q = I - P", Q, RationalMatrix.identity(n) - P)
    report.check_equal("traza de P = rango", sum(P.entry(i, i) for i in range(n)), pair.rank_P)

    d = lcm(PtP.denominator_lcm(), QtQ.denominator_lcm(), PPt.denominator_lcm())
    char_P = char_poly(PtP.scale(d))
    char_Q = char_poly(QtQ.scale(d))
    char_PPt = char_poly(PPt.scale(d))

    report.add("PᵀP sin autovalores en (0, 1)", char_P.roots_in_open_interval(0, d) == 0,
               f"{char_P.roots_in_open_interval(0, d)} raíces")
    report.add("QᵀQ sin autovalores en (0, 1)", char_Q.roots_in_open_interval(0, d) == 0,
               f"{char_Q.roots_in_open_interval(0, d)} raíces")

    reduced_P, r0 = char_P.strip_root(0)
    reduced_P, r1 = reduced_P.strip_root(d)
    reduced_Q, q0 = char_Q.strip_root(0)
    reduced_Q, q1 = reduced_Q.strip_root(d)
    report.check_equal("espectros iguales salvo 0 y 1", reduced_P.coefficients, reduced_Q.coefficients)
    report.check_equal("mult0(QᵀQ) = n - r0", q0, n - r0)
    report.check_equal("mult1(QᵀQ) = 2 r0 + r1 - n", q1, 2 * r0 + r1 - n)
    report.check_equal("σ(PᵀP) = σ(PPᵀ)", char_P.coefficients, char_PPt.coefficients)

    identity = RationalMatrix.identity(n)
    stacked = RationalMatrix.block([[P - identity], [P.T - identity]])
    report.check_equal("dim{P w = Pᵀ w = w} = r1", n - stacked.rank(), r1)

    # Autovectores flotantes: los r1 autovalores más cercanos a 1 dentro de la ventana
    candidates = [pair_ for pair_ in float_eig(PtP) if abs(pair_.value - 1) <= unit_window]
    candidates.sort(key=lambda pair_: abs(pair_.value - 1))
    P_float = P.to_numpy()
    scale = max(1.0, float(np.linalg.norm(P_float, 2)) ** 2)
    for k, eig in enumerate(candidates[:r1]):
        w = np.array(eig.vector)
        close = (np.linalg.norm(P_float @ w - w) <= tolerance * scale
                 and np.linalg.norm(P_float.T @ w - w) <= tolerance * scale)
        report.add(f"P w = Pᵀ w = w (autovector {k + 1})", close, f"lambda = {eig.value}")

    report.values.update({
        'd': d,
        'r0': r0,
        'r1': r1,
        'char_PtP': str(char_P),
        'char_QtQ': str(char_Q),
        'orthogonal': P.is_symmetric(),
    })
    return report
