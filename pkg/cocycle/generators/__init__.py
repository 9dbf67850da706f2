"""Módulo de generadores - Bases de ciclos, proyecciones y casos aleatorios."""

from cocycle.generators.basis import BasisBundle, build_basis, verify_basis
from cocycle.generators.oblique_pairs import ObliquePair, pair_from_projection, random_oblique_projection
from cocycle.generators.projections import ProjectionPair, build_projections, lambda_matrices

__all__ = [
    'BasisBundle',
    'build_basis',
    'verify_basis',
    'ProjectionPair',
    'build_projections',
    'lambda_matrices',
    'ObliquePair',
    'random_oblique_projection',
    'pair_from_projection',
]
