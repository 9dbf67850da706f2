"""
Núcleo de Cocycle: álgebra lineal exacta, excepciones e informes.
"""

from cocycle.core.exceptions import CocycleError
from cocycle.core.linalg import IntPolynomial, RationalMatrix, char_poly, float_eig
from cocycle.core.reports import CheckResult, RunReport, VerificationReport

__all__ = [
    'CocycleError',
    'RationalMatrix',
    'IntPolynomial',
    'char_poly',
    'float_eig',
    'CheckResult',
    'VerificationReport',
    'RunReport',
]
