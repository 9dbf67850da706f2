"""
Proyecciones oblicuas complementarias P y Q, la 2-forma Omega y la matriz de
superposición omega, junto con los cambios de base Lambda y *Lambda.
"""

from dataclasses import dataclass
from typing import Optional

from cocycle.core.exceptions import MatrixError
from cocycle.core.linalg import RationalMatrix
from cocycle.core.reports import VerificationReport
from cocycle.generators.basis import BasisBundle


@dataclass(frozen=True)
class ProjectionPair:
    """P, Q, Omega (|E| x |E|) y el bloque omega ((|V| - 1) x |C|), en orden canónico."""

    P: RationalMatrix
    Q: RationalMatrix
    omega_full: RationalMatrix
    omega_block: RationalMatrix


def build_projections(b: BasisBundle) -> ProjectionPair:
    """P = sum_alpha c_alpha e_alpha^T y Q = sum_mu e_mu c_mu^T."""
    n, m = b.num_cochords, b.size
    p_rows = [[0] * m for _ in range(m)]
    for a, cycle in enumerate(b.cycle_vectors):
        for i, value in enumerate(cycle):
            p_rows[i][n + a] = value
    q_rows = [[0] * m for _ in range(m)]
    for mu, cocycle in enumerate(b.cocycle_vectors):
        q_rows[mu] = list(cocycle)

    P = RationalMatrix.from_rows(p_rows, cols=m)
    Q = RationalMatrix.from_rows(q_rows, cols=m)
    omega_full = P - P.T
    omega_block = omega_full.submatrix(range(n), range(n, m))
    pair = ProjectionPair(P, Q, omega_full, omega_block)

    report = verify_projection_identities(pair)
    if not report.passed:
        failure = report.failures[0]
        raise MatrixError(f"Proyecciones inconsistentes: {failure.name} ({failure.detail})")
    return pair


def verify_projection_identities(p: ProjectionPair, b: Optional[BasisBundle] = None) -> VerificationReport:
    """
    Álgebra de proyecciones complementarias: idempotencia, anulación mutua,
    completitud y antisimetría de Omega. Con la base, además, núcleos e imágenes:
    im P = ker Q = espacio de ciclos e im Q = ker P = espacio de cocuerdas.
    """
    report = VerificationReport("Proyecciones complementarias")
    P, Q = p.P, p.Q
    m = P.rows
    identity = RationalMatrix.identity(m)
    zero = RationalMatrix.zeros(m, m)

    report.check_matrix("P^2 = P", P @ P, P)
    report.check_matrix("Q^2 = Q", Q @ Q, Q)
    report.check_matrix("PQ = 0", P @ Q, zero)
    report.check_matrix("QP = 0", Q @ P, zero)
    report.check_matrix("P + Q = I", P + Q, identity)
    report.check_matrix("Omega = P - P^T", p.omega_full, P - P.T)
    report.check_matrix("Omega = Q^T - Q", p.omega_full, Q.T - Q)
    report.check_matrix("Omega antisimétrica", p.omega_full.T, -p.omega_full)

    orthogonal = P == P.T
    report.values['orthogonal'] = orthogonal
    report.add("Omega = 0 si y sólo si P^T = P", orthogonal == p.omega_full.is_zero())

    if b is not None:
        n = b.num_cochords
        C = b.cycle_matrix()
        report.check_matrix("im P dentro del espacio de ciclos", b.incidence() @ P,
                            RationalMatrix.zeros(b.graph.num_vertices, m))
        report.check_equal("rango P = |C|", P.rank(), b.num_chords)
        report.check_equal("im P = espacio de ciclos",
                           RationalMatrix.block([[P.T], [C]]).rank() if C.rows else P.rank(),
                           b.num_chords)
        cochord_part = Q.submatrix(range(n, m), range(m))
        report.add("im Q dentro del espacio de cocuerdas", cochord_part.is_zero())
        report.check_equal("rango Q = |V| - 1", Q.rank(), n)
        report.check_matrix("ker P = espacio de cocuerdas", P.submatrix(range(m), range(n)),
                            RationalMatrix.zeros(m, n))
        report.check_equal("rango P + rango Q = |E|", P.rank() + Q.rank(), m)
    return report


def verify_two_form(b: BasisBundle, p: ProjectionPair) -> VerificationReport:
    """
    La 2-forma de ciclos coincide con la de cociclos, las proyecciones mutuas
    cumplen <e_mu|c_alpha> + <c_mu|e_alpha> = 0 y Omega_{mu alpha} = -<c_mu|e_alpha>.
    """
    report = VerificationReport("2-forma")
    n, m = b.num_cochords, b.size
    C, D = b.cycle_matrix(), b.cocycle_matrix()
    chords = RationalMatrix.from_rows(
        [[1 if j == n + a else 0 for j in range(m)] for a in range(b.num_chords)], cols=m)
    cochords = RationalMatrix.from_rows(
        [[1 if j == mu else 0 for j in range(m)] for mu in range(n)], cols=m)

    # sum_alpha (c_alpha e_alpha^T - e_alpha c_alpha^T) frente a la suma sobre cociclos
    cycle_form = C.T @ chords - chords.T @ C
    cocycle_form = D.T @ cochords - cochords.T @ D
    report.check_matrix("Omega de ciclos = Omega de cociclos", cycle_form, cocycle_form)
    report.check_matrix("Omega = P - P^T", p.omega_full, cycle_form)

    mutual = [[b.cycle_vectors[a][mu] + b.cocycle_vectors[mu][n + a] for a in range(b.num_chords)]
              for mu in range(n)]
    report.check_matrix("<e_mu|c_alpha> + <c_mu|e_alpha> = 0",
                        RationalMatrix.from_rows(mutual, cols=b.num_chords),
                        RationalMatrix.zeros(n, b.num_chords))

    expected = [[0] * m for _ in range(m)]
    for mu in range(n):
        for a in range(b.num_chords):
            expected[mu][n + a] = -b.cocycle_vectors[mu][n + a]
            expected[n + a][mu] = b.cocycle_vectors[mu][n + a]
    report.check_matrix("Omega_{mu alpha} = -<c_mu|e_alpha>", p.omega_full,
                        RationalMatrix.from_rows(expected, cols=m))
    report.check_matrix("omega es el bloque superior derecho de Omega", p.omega_block,
                        p.omega_full.submatrix(range(n), range(n, m)))
    return report


def lambda_matrices(b: BasisBundle):
    """
    Lambda: filas e_mu para cocuerdas y c_alpha para cuerdas.
    *Lambda: filas c_mu para cocuerdas y e_alpha para cuerdas.
    """
    n, m = b.num_cochords, b.size
    units = [[1 if j == i else 0 for j in range(m)] for i in range(m)]
    lam = RationalMatrix.from_rows(units[:n] + [list(c) for c in b.cycle_vectors], cols=m)
    star = RationalMatrix.from_rows([list(c) for c in b.cocycle_vectors] + units[n:], cols=m)
    return lam, star
