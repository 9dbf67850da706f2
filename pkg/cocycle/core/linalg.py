#!/usr/bin/env python3
"""
Álgebra lineal exacta sobre los racionales.

``RationalMatrix`` envuelve un ``DomainMatrix`` de SymPy sobre ``QQ``; nada en
este tipo redondea. Los polinomios característicos enteros se guardan en
``IntPolynomial`` (coeficientes ascendentes) y se apoyan en ``sympy.Poly`` para
divisiones y secuencias de Sturm. Los flotantes sólo aparecen en
``float_eig``, que usa NumPy para localizar autovectores.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
import sympy
from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

from cocycle.config import FLOAT_TOLERANCE
from cocycle.core.exceptions import (
    DimensionMismatch,
    NoConvergence,
    NonInteger,
    NotSquare,
    Singular,
)

Scalar = Union[int, Fraction, str]

_X = sympy.Symbol('x')


def to_fraction(value) -> Fraction:
    """Convierte un entero, ``Fraction``, cadena "p/q" o elemento de QQ."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    # Elementos de QQ (PythonMPQ / gmpy2.mpq / flint.fmpq) y sympy.Rational
    if hasattr(value, "numerator"):
        return Fraction(int(value.numerator), int(value.denominator))
    return Fraction(int(value.p), int(value.q))


def _qq(value: Scalar):
    frac = to_fraction(value)
    return QQ(frac.numerator, frac.denominator)


def _format_scalar(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


class RationalMatrix:
    """Matriz densa de racionales de precisión arbitraria (inmutable)."""

    __slots__ = ("_rep", "_shape")

    def __init__(self, rep: DomainMatrix):
        self._rep = rep
        self._shape = tuple(rep.shape)

    # ------------------------------------------------------------------
    # Construcción
    # ------------------------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]], cols: Optional[int] = None) -> "RationalMatrix":
        """Construye desde filas; ``cols`` es obligatorio si no hay filas."""
        rows = [list(row) for row in rows]
        n_rows = len(rows)
        n_cols = len(rows[0]) if rows else (cols or 0)
        if any(len(row) != n_cols for row in rows):
            raise DimensionMismatch("Filas de longitud desigual")
        elements = [[_qq(x) for x in row] for row in rows]
        return cls(DomainMatrix(elements, (n_rows, n_cols), QQ))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls.from_rows([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls.from_rows([[1 if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def block(cls, blocks: Sequence[Sequence["RationalMatrix"]]) -> "RationalMatrix":
        """Ensambla una matriz por bloques (lista de filas de bloques)."""
        rows: List[List[Fraction]] = []
        width = sum(b.cols for b in blocks[0]) if blocks else 0
        for block_row in blocks:
            height = block_row[0].rows
            if any(b.rows != height for b in block_row):
                raise DimensionMismatch("Bloques con alturas distintas en una misma fila")
            parts = [b.to_fractions() for b in block_row]
            for i in range(height):
                rows.append([x for part in parts for x in part[i]])
        return cls.from_rows(rows, cols=width)

    # ------------------------------------------------------------------
    # Acceso
    # ------------------------------------------------------------------
    @property
    def shape(self) -> Tuple[int, int]:
        return self._shape

    @property
    def rows(self) -> int:
        return self._shape[0]

    @property
    def cols(self) -> int:
        return self._shape[1]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def to_fractions(self) -> List[List[Fraction]]:
        if self.rows == 0 or self.cols == 0:
            return [[] for _ in range(self.rows)]
        return [[to_fraction(x) for x in row] for row in self._rep.to_list()]

    def entry(self, i: int, j: int) -> Fraction:
        return self.to_fractions()[i][j]

    def row(self, i: int) -> Tuple[Fraction, ...]:
        return tuple(self.to_fractions()[i])

    def column(self, j: int) -> Tuple[Fraction, ...]:
        return tuple(row[j] for row in self.to_fractions())

    def submatrix(self, row_indices: Sequence[int], col_indices: Sequence[int]) -> "RationalMatrix":
        data = self.to_fractions()
        return RationalMatrix.from_rows(
            [[data[i][j] for j in col_indices] for i in row_indices], cols=len(col_indices)
        )

    def to_strings(self) -> List[List[str]]:
        """Entradas como cadenas ("3", "-1/8"), útil para JSON y golden files."""
        return [[_format_scalar(x) for x in row] for row in self.to_fractions()]

    def to_numpy(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.to_fractions()],
                        dtype=float).reshape(self.shape)

    # ------------------------------------------------------------------
    # Aritmética
    # ------------------------------------------------------------------
    def _check_same_shape(self, other: "RationalMatrix") -> None:
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} frente a {other.shape}")

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_same_shape(other)
        if 0 in self.shape:
            return self
        return RationalMatrix(self._rep + other._rep)

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_same_shape(other)
        if 0 in self.shape:
            return self
        return RationalMatrix(self._rep - other._rep)

    def __neg__(self) -> "RationalMatrix":
        if 0 in self.shape:
            return self
        return RationalMatrix(-self._rep)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"No se pueden multiplicar {self.shape} y {other.shape}")
        if 0 in (self.rows, self.cols, other.cols):
            return RationalMatrix.zeros(self.rows, other.cols)
        return RationalMatrix(self._rep.matmul(other._rep))

    def scale(self, factor: Scalar) -> "RationalMatrix":
        if 0 in self.shape:
            return self
        return RationalMatrix(self._rep * _qq(factor))

    def apply(self, vector: Sequence[Scalar]) -> Tuple[Fraction, ...]:
        """Producto matriz-vector exacto."""
        if len(vector) != self.cols:
            raise DimensionMismatch(f"Vector de longitud {len(vector)} para matriz {self.shape}")
        column = RationalMatrix.from_rows([[x] for x in vector], cols=1)
        return (self @ column).column(0) if self.rows else ()

    @property
    def T(self) -> "RationalMatrix":
        if 0 in self.shape:
            return RationalMatrix.zeros(self.cols, self.rows)
        return RationalMatrix(self._rep.transpose())

    # ------------------------------------------------------------------
    # Comparación
    # ------------------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self.to_fractions() == other.to_fractions()

    def __hash__(self):
        return hash((self.shape, tuple(map(tuple, self.to_fractions()))))

    def first_difference(self, other: "RationalMatrix") -> Optional[Tuple[int, int]]:
        """Primera coordenada (fila, columna) donde difieren; ``None`` si son iguales."""
        self._check_same_shape(other)
        for i, (a, b) in enumerate(zip(self.to_fractions(), other.to_fractions())):
            for j, (x, y) in enumerate(zip(a, b)):
                if x != y:
                    return (i, j)
        return None

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.to_fractions() for x in row)

    def is_symmetric(self) -> bool:
        return self.is_square and self == self.T

    def is_integer(self) -> bool:
        return all(x.denominator == 1 for row in self.to_fractions() for x in row)

    def denominator_lcm(self) -> int:
        return lcm(1, *(x.denominator for row in self.to_fractions() for x in row))

    def __repr__(self):
        return f"RationalMatrix({self.to_strings()})"

    # ------------------------------------------------------------------
    # Invariantes exactos
    # ------------------------------------------------------------------
    def det(self) -> Fraction:
        """Determinante exacto; la matriz 0x0 tiene determinante 1."""
        if not self.is_square:
            raise NotSquare(f"det de una matriz {self.shape}")
        if self.rows == 0:
            return Fraction(1)
        return to_fraction(self._rep.det())

    def inverse(self) -> "RationalMatrix":
        if not self.is_square:
            raise NotSquare(f"inversa de una matriz {self.shape}")
        if self.rows == 0:
            return self
        if self.det() == 0:
            raise Singular("Determinante nulo")
        return RationalMatrix(self._rep.inv())

    def rank(self) -> int:
        if 0 in self.shape:
            return 0
        return int(self._rep.rank())

    def leading_minors(self) -> List[Fraction]:
        """Menores principales líderes (criterio de Sylvester)."""
        return [self.submatrix(range(k), range(k)).det() for k in range(1, self.rows + 1)]


# =============================================================================
# POLINOMIOS ENTEROS
# =============================================================================

@dataclass(frozen=True)
class IntPolynomial:
    """Polinomio con coeficientes enteros en grado ascendente."""

    coefficients: Tuple[int, ...]

    def __post_init__(self):
        coeffs = list(self.coefficients)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(int(c) for c in coeffs) or (0,))

    @classmethod
    def from_poly(cls, poly: sympy.Poly) -> "IntPolynomial":
        return cls(tuple(int(c) for c in reversed(poly.all_coeffs())))

    def to_poly(self) -> sympy.Poly:
        return sympy.Poly(list(reversed(self.coefficients)), _X, domain=ZZ)

    @property
    def degree(self) -> int:
        return -1 if self.is_zero() else len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return self.coefficients == (0,)

    def __call__(self, x: Scalar) -> Fraction:
        point = to_fraction(x)
        value = sympy.Rational(self.to_poly().eval(sympy.Rational(point.numerator, point.denominator)))
        return Fraction(int(value.p), int(value.q))

    def multiplicity(self, root: int) -> int:
        """Multiplicidad de ``root`` como raíz (0 si no lo es)."""
        return self.strip_root(root)[1]

    def strip_root(self, root: int) -> Tuple["IntPolynomial", int]:
        """Divide por (x - root) mientras sea posible; devuelve cociente y veces."""
        if self.is_zero():
            return self, 0
        poly = self.to_poly()
        factor = sympy.Poly(_X - root, _X, domain=ZZ)
        count = 0
        while poly.degree() > 0 and poly.eval(root) == 0:
            poly = poly.quo(factor)
            count += 1
        return IntPolynomial.from_poly(poly), count

    def roots_in_open_interval(self, low: Scalar, high: Scalar) -> int:
        """Número de raíces reales distintas en (low, high) por secuencia de Sturm."""
        if self.degree < 1:
            return 0
        low, high = to_fraction(low), to_fraction(high)
        squarefree = self.to_poly().sqf_part()
        chain = sympy.sturm(squarefree)

        def variations(point: Fraction) -> int:
            value = sympy.Rational(point.numerator, point.denominator)
            signs = [sympy.sign(p.eval(value)) for p in chain]
            signs = [s for s in signs if s != 0]
            return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

        # Sturm cuenta raíces en (low, high]; se descuenta la de high
        count = variations(low) - variations(high)
        if self(high) == 0:
            count -= 1
        return count

    def __str__(self):
        return str(self.to_poly().as_expr())


def char_poly(m: RationalMatrix) -> IntPolynomial:
    """det(xI - m) con coeficientes enteros exactos."""
    if not m.is_square:
        raise NotSquare(f"polinomio característico de una matriz {m.shape}")
    if not m.is_integer():
        raise NonInteger("El polinomio característico entero exige entradas enteras")
    if m.rows == 0:
        return IntPolynomial((1,))
    coeffs = m._rep.charpoly()
    return IntPolynomial(tuple(int(to_fraction(c)) for c in reversed(coeffs)))


# =============================================================================
# AUTOPARES FLOTANTES
# =============================================================================

@dataclass(frozen=True)
class EigenPair:
    """Autovalor, autovector y residuo relativo ||m v - λ v|| / (||m|| ||v||)."""

    value: float
    vector: Tuple[float, ...]
    residual: float


def relative_residual(m: np.ndarray, value: float, vector: np.ndarray) -> float:
    norm_m = np.linalg.norm(m, 2) if m.size else 0.0
    norm_v = np.linalg.norm(vector)
    error = np.linalg.norm(m @ vector - value * vector)
    scale = norm_m * norm_v
    return float(error / scale) if scale > 0 else float(error)


def float_eig(m: RationalMatrix, symmetric: bool = True) -> List[EigenPair]:
    """
    Autopares en coma flotante ordenados por autovalor.

    Args:
        m: Matriz cuadrada
        symmetric: Si True usa ``eigh`` (algoritmo simétrico)

    Returns:
        Lista de ``EigenPair`` con residuo relativo
    """
    if not m.is_square:
        raise NotSquare(f"autovalores de una matriz {m.shape}")
    if m.rows == 0:
        return []
    array = m.to_numpy()
    try:
        if symmetric:
            values, vectors = np.linalg.eigh(array)
        else:
            values, vectors = np.linalg.eig(array)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc

    pairs = []
    for k in range(len(values)):
        value = float(np.real(values[k]))
        vector = np.real(vectors[:, k])
        pairs.append(EigenPair(value, tuple(float(x) for x in vector),
                               relative_residual(array, value, vector)))
    pairs.sort(key=lambda pair: pair.value)
    return pairs


def eigenvalues_close(found: Iterable[float], expected: Iterable[float],
                      tolerance: float = FLOAT_TOLERANCE) -> bool:
    """Compara multiconjuntos de autovalores con tolerancia relativa."""
    found, expected = sorted(found), sorted(expected)
    if len(found) != len(expected):
        return False
    return all(abs(a - b) <= tolerance * max(1.0, abs(b)) for a, b in zip(found, expected))


# =============================================================================
# VECTORES
# =============================================================================

def dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Fraction:
    """Producto escalar exacto."""
    if len(u) != len(v):
        raise DimensionMismatch(f"Vectores de longitud {len(u)} y {len(v)}")
    row = RationalMatrix.from_rows([list(u)], cols=len(u))
    column = RationalMatrix.from_rows([[x] for x in v], cols=1)
    return (row @ column).entry(0, 0)


def unit_vector(n: int, i: int) -> Tuple[int, ...]:
    return tuple(1 if k == i else 0 for k in range(n))
