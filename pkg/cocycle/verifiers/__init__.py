"""Módulo de verificadores - Teoremas comprobados sobre grafos y proyecciones."""

from cocycle.verifiers.duality import dual_graph, verify_duality
from cocycle.verifiers.ks_spectral import KsPair, ks_matrices, spectra_match_mod_one
from cocycle.verifiers.laplacian import laplacian, laplacian_shift_check
from cocycle.verifiers.projection_lab import verify_projection_theorems
from cocycle.verifiers.suite import SuiteOptions, run_random_suite

__all__ = [
    'KsPair',
    'ks_matrices',
    'spectra_match_mod_one',
    'dual_graph',
    'verify_duality',
    'laplacian',
    'laplacian_shift_check',
    'verify_projection_theorems',
    'SuiteOptions',
    'run_random_suite',
]
