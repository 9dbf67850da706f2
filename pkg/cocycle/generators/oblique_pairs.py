"""
Pares de proyecciones oblicuas complementarias sobre espacios abstractos.
"""

from dataclasses import dataclass

import numpy as np

from cocycle.config import GENERATION_RETRIES, RANDOM_SUITE_DEFAULTS
from cocycle.core.exceptions import GenerationFailed, NotSquare, PreconditionViolation
from cocycle.core.linalg import RationalMatrix


@dataclass(frozen=True)
class ObliquePair:
    """P idempotente de rango ``rank_P`` y su complementaria Q = I - P."""

    n: int
    P: RationalMatrix
    Q: RationalMatrix
    rank_P: int


def pair_from_projection(P: RationalMatrix) -> ObliquePair:
    """Completa un idempotente con Q = I - P."""
    if not P.is_square:
        raise NotSquare(f"Proyección de forma {P.shape}")
    if P @ P != P:
        raise PreconditionViolation("La matriz no es idempotente")
    n = P.rows
    return ObliquePair(n, P, RationalMatrix.identity(n) - P, P.rank())


def random_oblique_projection(n: int, k: int, seed: int,
                              entry_range: int = RANDOM_SUITE_DEFAULTS['entry_range'],
                              retries: int = GENERATION_RETRIES) -> ObliquePair:
    """
    P = A (B A)^-1 B con A (n x k) y B (k x n) enteros en [-entry_range, entry_range].
    Se regeneran A y B hasta que B A sea invertible.

    Raises:
        PreconditionViolation: si no se cumple 0 < k < n
        GenerationFailed: si se agotan los reintentos
    """
    if not 0 < k < n:
        raise PreconditionViolation(f"Se requiere 0 < k < n (k={k}, n={n})")
    rng = np.random.default_rng(seed)
    for _ in range(retries):
        A = RationalMatrix.from_rows(rng.integers(-entry_range, entry_range + 1, size=(n, k)).tolist(), cols=k)
        B = RationalMatrix.from_rows(rng.integers(-entry_range, entry_range + 1, size=(k, n)).tolist(), cols=n)
        BA = B @ A
        if BA.det() == 0:
            continue
        return pair_from_projection(A @ BA.inverse() @ B)
    raise GenerationFailed(f"Sin B A invertible tras {retries} intentos (n={n}, k={k})")
