#!/usr/bin/env python3
"""
Informes de verificación.

Una verificación nunca lanza por una identidad que no se cumple: acumula
``CheckResult`` en un ``VerificationReport``. Cada fallo matricial guarda la
primera coordenada donde los dos lados difieren.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from cocycle.core.linalg import RationalMatrix


def to_jsonable(value: Any) -> Any:
    """Convierte fracciones, tuplas y matrices a tipos serializables en JSON."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, RationalMatrix):
        return value.to_strings()
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    return value


@dataclass
class CheckResult:
    """Resultado de una comprobación individual."""

    name: str
    passed: bool
    detail: str = ""
    counterexample: Optional[Tuple[int, ...]] = None

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {'name': self.name, 'passed': self.passed}
        if self.detail:
            result['detail'] = self.detail
        if self.counterexample is not None:
            result['counterexample'] = list(self.counterexample)
        return result


@dataclass
class VerificationReport:
    """Colección ordenada de comprobaciones con notas y valores calculados."""

    title: str
    checks: List[CheckResult] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    values: Dict[str, Any] = field(default_factory=dict)

    # ------------------------------------------------------------------
    # Registro
    # ------------------------------------------------------------------
    def add(self, name: str, passed: bool, detail: str = "",
            counterexample: Optional[Tuple[int, ...]] = None) -> bool:
        self.checks.append(CheckResult(name, bool(passed), "" if passed else detail, counterexample))
        return bool(passed)

    def check_matrix(self, name: str, left: RationalMatrix, right: RationalMatrix) -> bool:
        """Igualdad exacta de matrices; un fallo guarda la primera entrada distinta."""
        if left.shape != right.shape:
            return self.add(name, False, f"dimensiones {left.shape} frente a {right.shape}")
        where = left.first_difference(right)
        if where is None:
            return self.add(name, True)
        i, j = where
        detail = f"entrada ({i}, {j}): {left.entry(i, j)} frente a {right.entry(i, j)}"
        return self.add(name, False, detail, where)

    def check_equal(self, name: str, left: Any, right: Any) -> bool:
        """Igualdad exacta de escalares, vectores o polinomios."""
        if left == right:
            return self.add(name, True)
        counterexample = None
        if isinstance(left, (list, tuple)) and isinstance(right, (list, tuple)):
            for k, (a, b) in enumerate(zip(left, right)):
                if a != b:
                    counterexample = (k,)
                    break
        return self.add(name, False, f"{left} frente a {right}", counterexample)

    def note(self, text: str) -> None:
        self.notes.append(text)

    def extend(self, other: "VerificationReport", prefix: str = "") -> None:
        """Incorpora las comprobaciones y notas de otro informe."""
        for check in other.checks:
            self.checks.append(CheckResult(prefix + check.name, check.passed,
                                           check.detail, check.counterexample))
        self.notes.extend(other.notes)

    # ------------------------------------------------------------------
    # Consulta
    # ------------------------------------------------------------------
    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def get(self, name: str) -> Optional[CheckResult]:
        for check in self.checks:
            if check.name == name:
                return check
        return None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'title': self.title,
            'passed': self.passed,
            'checks': [check.to_dict() for check in self.checks],
            'notes': list(self.notes),
            'values': to_jsonable(self.values),
        }

    def __repr__(self):
        return f"VerificationReport({self.title}, {len(self.checks)} checks, passed={self.passed})"


class RunReport:
    """Informe de una invocación de la CLI: entradas, comprobaciones, matrices y tiempo."""

    def __init__(self, command: str, inputs: Optional[Dict[str, Any]] = None):
        self.command = command
        self.inputs: Dict[str, Any] = dict(inputs or {})
        self.sections: List[VerificationReport] = []
        self.matrices: Dict[str, Any] = {}
        self.data: Dict[str, Any] = {}
        self._started = time.perf_counter()
        self.elapsed: Optional[float] = None

    def add_section(self, report: VerificationReport) -> VerificationReport:
        self.sections.append(report)
        return report

    def add_matrix(self, name: str, matrix: RationalMatrix) -> None:
        self.matrices[name] = matrix

    def finish(self) -> "RunReport":
        self.elapsed = time.perf_counter() - self._started
        return self

    @property
    def checks(self) -> Sequence[CheckResult]:
        return [check for section in self.sections for check in section.checks]

    @property
    def passed(self) -> bool:
        return all(section.passed for section in self.sections)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'command': self.command,
            'inputs': to_jsonable(self.inputs),
            'passed': self.passed,
            'sections': [section.to_dict() for section in self.sections],
            'matrices': to_jsonable(self.matrices),
            'data': to_jsonable(self.data),
            'elapsed_seconds': self.elapsed,
        }
