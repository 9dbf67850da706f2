#!/usr/bin/env python3
"""
Redes termodinámicas sobre el grafo.

Observables macroscópicos (corrientes de marea y de vórtice, caídas de
potencial y circulaciones), leyes de Kirchhoff, producción de entropía y su
descomposición, régimen lineal, proyectores ortogonales y la conjugación
canónica expresada como Lambda *Lambda^T = 1.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

from cocycle.core.exceptions import DimensionMismatch
from cocycle.core.linalg import RationalMatrix, dot
from cocycle.core.reports import VerificationReport
from cocycle.generators.basis import BasisBundle
from cocycle.generators.projections import ProjectionPair, lambda_matrices
from cocycle.models.graph_models import ThermoState
from cocycle.verifiers.ks_spectral import KsPair

Values = Tuple[Fraction, ...]


@dataclass(frozen=True)
class MacroObservables:
    """J_mu (marea), J_alpha (vórtice), F_mu (potencial) y F_alpha (circulación)."""

    J_mu: Values
    J_alpha: Values
    F_mu: Values
    F_alpha: Values

    def to_dict(self) -> Dict[str, list]:
        return {
            'J_mu': [str(x) for x in self.J_mu],
            'J_alpha': [str(x) for x in self.J_alpha],
            'F_mu': [str(x) for x in self.F_mu],
            'F_alpha': [str(x) for x in self.F_alpha],
        }


@dataclass(frozen=True)
class EntropyProduction:
    sigma: Fraction
    tidal_part: Fraction
    vortex_part: Fraction


@dataclass(frozen=True)
class OrthogonalProjectors:
    """P' y Q' ortogonales asociados a la misma descomposición."""

    Pprime: RationalMatrix
    Qprime: RationalMatrix
    report: VerificationReport


def _check_state(b: BasisBundle, s: ThermoState) -> None:
    if len(s.currents) != b.size or len(s.forces) != b.size:
        raise DimensionMismatch(f"El estado debe tener {b.size} componentes")


def macroscopic_observables(b: BasisBundle, s: ThermoState) -> MacroObservables:
    """J_alpha = <e_alpha|j>, J_mu = <c_mu|j>, F_mu = <e_mu|f>, F_alpha = <c_alpha|f>."""
    _check_state(b, s)
    n = b.num_cochords
    return MacroObservables(
        J_mu=tuple(dot(c, s.currents) for c in b.cocycle_vectors),
        J_alpha=tuple(s.currents[n:]),
        F_mu=tuple(s.forces[:n]),
        F_alpha=tuple(dot(c, s.forces) for c in b.cycle_vectors),
    )


def reconstruct_state(b: BasisBundle, obs: MacroObservables) -> ThermoState:
    """j = sum J_mu e_mu + sum J_alpha c_alpha;  f = sum F_mu c_mu + sum F_alpha e_alpha."""
    n, m = b.num_cochords, b.size
    currents = [Fraction(0)] * m
    forces = [Fraction(0)] * m
    for mu, value in enumerate(obs.J_mu):
        currents[mu] += value
    for a, value in enumerate(obs.J_alpha):
        for i, x in enumerate(b.cycle_vectors[a]):
            currents[i] += value * x
    for mu, value in enumerate(obs.F_mu):
        for i, x in enumerate(b.cocycle_vectors[mu]):
            forces[i] += value * x
    for a, value in enumerate(obs.F_alpha):
        forces[n + a] += value
    return ThermoState(tuple(currents), tuple(forces))


def kirchhoff_checks(b: BasisBundle, p: ProjectionPair, s: ThermoState) -> VerificationReport:
    """
    kcl: Q j = 0; kvl: P^T f = 0; equilibrio: ambas. Los indicadores se
    guardan en ``values``; las comprobaciones son las equivalencias
    kcl <=> J_mu = 0 y kvl <=> F_alpha = 0.
    """
    _check_state(b, s)
    report = VerificationReport("Leyes de Kirchhoff")
    obs = macroscopic_observables(b, s)
    kcl = all(x == 0 for x in p.Q.apply(s.currents))
    kvl = all(x == 0 for x in p.P.T.apply(s.forces))
    report.values.update({'kcl': kcl, 'kvl': kvl, 'equilibrium': kcl and kvl})
    report.check_equal("kcl <=> J_mu = 0", kcl, all(x == 0 for x in obs.J_mu))
    report.check_equal("kvl <=> F_alpha = 0", kvl, all(x == 0 for x in obs.F_alpha))
    return report


def entropy_production(b: BasisBundle, s: ThermoState) -> EntropyProduction:
    """sigma = <f|j> = sum F_alpha J_alpha (vórtice) + sum F_mu J_mu (marea)."""
    obs = macroscopic_observables(b, s)
    sigma = dot(s.forces, s.currents)
    vortex = dot(obs.F_alpha, obs.J_alpha)
    tidal = dot(obs.F_mu, obs.J_mu)
    if sigma != vortex + tidal:
        raise ArithmeticError(f"sigma = {sigma} != {vortex} + {tidal}")
    return EntropyProduction(sigma, tidal, vortex)


def linear_regime_epr(b: BasisBundle, ks: KsPair, j: Sequence) -> VerificationReport:
    """
    Régimen de resistencias unidad (f = j):
    <j|j> = J_mu (*K^-1) J_mu' + F_alpha (K^-1) F_alpha'.
    """
    if len(j) != b.size:
        raise DimensionMismatch(f"La corriente debe tener {b.size} componentes")
    report = VerificationReport("Régimen lineal")
    current = tuple(Fraction(x) for x in j)
    J_mu = [dot(c, current) for c in b.cocycle_vectors]
    F_alpha = [dot(c, current) for c in b.cycle_vectors]

    left = dot(current, current)
    tidal = dot(J_mu, ks.Kstar.inverse().apply(J_mu)) if J_mu else Fraction(0)
    vortex = dot(F_alpha, ks.K.inverse().apply(F_alpha)) if F_alpha else Fraction(0)
    report.check_equal("<j|j> = J *K^-1 J + F K^-1 F", left, tidal + vortex)
    report.add("sigma >= 0", left >= 0)
    report.values.update({'sigma': left, 'tidal': tidal, 'vortex': vortex})
    return report


def orthogonal_projectors(b: BasisBundle, ks: KsPair) -> OrthogonalProjectors:
    """P' = C^T K^-1 C y Q' = D^T *K^-1 D: proyectores ortogonales complementarios."""
    C, D = b.cycle_matrix(), b.cocycle_matrix()
    Pprime = C.T @ ks.K.inverse() @ C
    Qprime = D.T @ ks.Kstar.inverse() @ D

    report = VerificationReport("Proyectores ortogonales")
    m = b.size
    report.check_matrix("P'^2 = P'", Pprime @ Pprime, Pprime)
    report.check_matrix("Q'^2 = Q'", Qprime @ Qprime, Qprime)
    report.check_matrix("P'^T = P'", Pprime.T, Pprime)
    report.check_matrix("Q'^T = Q'", Qprime.T, Qprime)
    report.check_matrix("P' + Q' = I", Pprime + Qprime, RationalMatrix.identity(m))
    report.check_matrix("P' Q' = 0", Pprime @ Qprime, RationalMatrix.zeros(m, m))
    return OrthogonalProjectors(Pprime, Qprime, report)


def verify_lambda_duality(b: BasisBundle, s: Optional[ThermoState] = None) -> VerificationReport:
    """
    Lambda *Lambda^T = 1: los observables J = *Lambda j y F = Lambda f son
    canónicamente conjugados. Con un estado, además, sigma = <F|J>.
    """
    report = VerificationReport("Conjugación canónica")
    lam, star = lambda_matrices(b)
    report.check_matrix("Lambda *Lambda^T = 1", lam @ star.T, RationalMatrix.identity(b.size))
    if s is not None:
        _check_state(b, s)
        obs = macroscopic_observables(b, s)
        J = star.apply(s.currents)
        F = lam.apply(s.forces)
        report.check_equal("J = *Lambda j", J, obs.J_mu + obs.J_alpha)
        report.check_equal("F = Lambda f", F, obs.F_mu + obs.F_alpha)
        report.check_equal("<f|j> = <F|J>", dot(s.forces, s.currents), dot(F, J))
    return report
