"""Administrador de la configuración de verificación.
Mantiene data/settings.yaml como fuente de verdad para tolerancias, límites de
fuerza bruta y parámetros de la suite aleatoria. Los flags de la CLI tienen
prioridad sobre estos valores.
"""

from __future__ import annotations

import os
from copy import deepcopy
from dataclasses import dataclass
from typing import Any, Dict, Optional

import yaml

from cocycle.config import (
    DATA_DIRECTORY,
    FLOAT_TOLERANCE,
    GENERATION_RETRIES,
    RANDOM_SUITE_DEFAULTS,
    SETTINGS_FILENAME,
    SPANNING_TREE_GUARD,
    UNIT_EIGENVALUE_WINDOW,
)

OUTPUT_FORMATS = ("text", "json")

DEFAULT_SETTINGS: Dict[str, Any] = {
    "version": 1,
    "tolerances": {
        "float": FLOAT_TOLERANCE,
        "unit_window": UNIT_EIGENVALUE_WINDOW,
    },
    "limits": {
        "spanning_tree_guard": SPANNING_TREE_GUARD,
        "generation_retries": GENERATION_RETRIES,
    },
    "random_suite": dict(RANDOM_SUITE_DEFAULTS),
    "output": {
        "format": "text",
        "show_matrices": True,
    },
}

_global_settings_manager: Optional["SettingsManager"] = None


@dataclass
class VerifySettings:
    """Vista plana y tipada de la configuración."""

    float_tolerance: float = FLOAT_TOLERANCE
    unit_window: float = UNIT_EIGENVALUE_WINDOW
    spanning_tree_guard: int = SPANNING_TREE_GUARD
    generation_retries: int = GENERATION_RETRIES
    cases: int = RANDOM_SUITE_DEFAULTS["cases"]
    seed: int = RANDOM_SUITE_DEFAULTS["seed"]
    max_v: int = RANDOM_SUITE_DEFAULTS["max_v"]
    max_e: int = RANDOM_SUITE_DEFAULTS["max_e"]
    lab_max_n: int = RANDOM_SUITE_DEFAULTS["lab_max_n"]
    entry_range: int = RANDOM_SUITE_DEFAULTS["entry_range"]
    max_denominator: int = RANDOM_SUITE_DEFAULTS["max_denominator"]
    output_format: str = "text"
    show_matrices: bool = True

    def to_dict(self) -> Dict[str, Any]:
        return {
            "version": DEFAULT_SETTINGS["version"],
            "tolerances": {"float": self.float_tolerance, "unit_window": self.unit_window},
            "limits": {
                "spanning_tree_guard": self.spanning_tree_guard,
                "generation_retries": self.generation_retries,
            },
            "random_suite": {
                "cases": self.cases,
                "seed": self.seed,
                "max_v": self.max_v,
                "max_e": self.max_e,
                "lab_max_n": self.lab_max_n,
                "entry_range": self.entry_range,
                "max_denominator": self.max_denominator,
            },
            "output": {"format": self.output_format, "show_matrices": self.show_matrices},
        }

    @classmethod
    def from_dict(cls, payload: Dict) -> "VerifySettings":
        if not isinstance(payload, dict):
            return cls()

        tolerances = payload.get("tolerances", {})
        limits = payload.get("limits", {})
        suite = payload.get("random_suite", {})
        output = payload.get("output", {})
        default = cls()
        return cls(
            float_tolerance=float(tolerances.get("float", default.float_tolerance)),
            unit_window=float(tolerances.get("unit_window", default.unit_window)),
            spanning_tree_guard=int(limits.get("spanning_tree_guard", default.spanning_tree_guard)),
            generation_retries=int(limits.get("generation_retries", default.generation_retries)),
            cases=int(suite.get("cases", default.cases)),
            seed=int(suite.get("seed", default.seed)),
            max_v=int(suite.get("max_v", default.max_v)),
            max_e=int(suite.get("max_e", default.max_e)),
            lab_max_n=int(suite.get("lab_max_n", default.lab_max_n)),
            entry_range=int(suite.get("entry_range", default.entry_range)),
            max_denominator=int(suite.get("max_denominator", default.max_denominator)),
            output_format=str(output.get("format", default.output_format)),
            show_matrices=bool(output.get("show_matrices", default.show_matrices)),
        )


class SettingsManager:
    """Carga, valida y persiste la configuración de Cocycle."""

    def __init__(self, base_dir: Optional[str] = None):
        self.base_dir = base_dir or DATA_DIRECTORY
        self.file_path = os.path.join(self.base_dir, SETTINGS_FILENAME)
        self.data = self._load()
        self._validate(self.data)

    # ------------------------------------------------------------------
    # Carga / persistencia
    # ------------------------------------------------------------------
    def _load(self) -> Dict[str, Any]:
        """Carga desde disco; si no existe o no se puede leer, usa los valores por defecto."""
        if os.path.exists(self.file_path):
            try:
                with open(self.file_path, "r", encoding="utf-8") as fh:
                    loaded = yaml.safe_load(fh) or {}
                if isinstance(loaded, dict):
                    return self._merge_with_defaults(loaded)
            except (OSError, yaml.YAMLError):
                pass
        return deepcopy(DEFAULT_SETTINGS)

    def save(self) -> None:
        os.makedirs(self.base_dir, exist_ok=True)
        with open(self.file_path, "w", encoding="utf-8") as fh:
            yaml.safe_dump(self.data, fh, allow_unicode=True, sort_keys=False)

    def _merge_with_defaults(self, loaded: Dict[str, Any]) -> Dict[str, Any]:
        data = deepcopy(DEFAULT_SETTINGS)
        for key, value in loaded.items():
            if isinstance(value, dict) and isinstance(data.get(key), dict):
                data[key].update(value)
            else:
                data[key] = value
        return data

    # ------------------------------------------------------------------
    # Lectura / mutación
    # ------------------------------------------------------------------
    @property
    def settings(self) -> VerifySettings:
        return VerifySettings.from_dict(self.data)

    def set_value(self, section: str, key: str, value: Any) -> None:
        """Cambia un valor, lo valida y guarda el archivo."""
        if section not in DEFAULT_SETTINGS or not isinstance(DEFAULT_SETTINGS[section], dict):
            raise ValueError(f"Sección inválida: {section}")
        if key not in DEFAULT_SETTINGS[section]:
            raise ValueError(f"Clave inválida: {section}.{key}")
        candidate = deepcopy(self.data)
        candidate[section][key] = value
        self._validate(candidate)
        self.data = candidate
        self.save()

    def reset_defaults(self) -> None:
        self.data = deepcopy(DEFAULT_SETTINGS)
        self.save()

    # ------------------------------------------------------------------
    # Validación
    # ------------------------------------------------------------------
    def _validate(self, data: Dict[str, Any]) -> None:
        for key in ("float", "unit_window"):
            value = data["tolerances"].get(key)
            if isinstance(value, bool) or not isinstance(value, (int, float)) or value <= 0:
                raise ValueError(f"Tolerancia inválida: {key}={value!r}")

        integers = [("limits", key) for key in DEFAULT_SETTINGS["limits"]]
        integers += [("random_suite", key) for key in DEFAULT_SETTINGS["random_suite"]]
        for section, key in integers:
            value = data[section].get(key)
            if isinstance(value, bool) or not isinstance(value, int) or value < 0:
                raise ValueError(f"Entero no negativo requerido: {section}.{key}={value!r}")

        suite = data["random_suite"]
        if suite["max_v"] < 1 or suite["max_e"] < 1:
            raise ValueError("max_v y max_e deben ser al menos 1")
        if suite["lab_max_n"] < 2 or suite["max_denominator"] < 1:
            raise ValueError("lab_max_n >= 2 y max_denominator >= 1")

        output = data["output"]
        if output.get("format") not in OUTPUT_FORMATS:
            raise ValueError(f"Formato inválido: {output.get('format')!r}")
        if not isinstance(output.get("show_matrices"), bool):
            raise ValueError("output.show_matrices debe ser booleano")


# ----------------------------------------------------------------------
# Gestión global para reutilizar instancia y respetar el mismo base_dir
# ----------------------------------------------------------------------

def set_global_settings_manager(manager: SettingsManager) -> None:
    global _global_settings_manager
    _global_settings_manager = manager


def get_global_settings(base_dir: Optional[str] = None) -> SettingsManager:
    global _global_settings_manager
    wanted = base_dir or DATA_DIRECTORY
    if _global_settings_manager is None or _global_settings_manager.base_dir != wanted:
        _global_settings_manager = SettingsManager(wanted)
    return _global_settings_manager
