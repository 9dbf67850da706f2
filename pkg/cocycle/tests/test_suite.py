#!/usr/bin/env python3
"""
Runner de todos los tests de Cocycle, sin pytest.

    python -m cocycle.tests.test_suite
"""

import os
import sys
import traceback

# Raíz del proyecto en el path
project_root = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
if project_root not in sys.path:
    sys.path.insert(0, project_root)

from cocycle.config import EMOJIS, SEPARATOR_MAJOR, SEPARATOR_MINOR
from cocycle.tests import (
    test_basis_projections,
    test_cli,
    test_duality,
    test_graph_core,
    test_ks_spectral,
    test_laplacian,
    test_linalg,
    test_projection_lab,
    test_random_suite,
    test_settings_manager,
    test_thermo,
)

MODULES = [
    ("Álgebra racional", test_linalg),
    ("Grafos y árboles", test_graph_core),
    ("Base y proyecciones", test_basis_projections),
    ("Kirchhoff-Symanzik", test_ks_spectral),
    ("Dualidad planar", test_duality),
    ("Laplaciano", test_laplacian),
    ("Termodinámica", test_thermo),
    ("Proyecciones oblicuas", test_projection_lab),
    ("Suite aleatoria", test_random_suite),
    ("Configuración", test_settings_manager),
    ("CLI", test_cli),
]


def _module_tests(module):
    return [(name, getattr(module, name)) for name in dir(module)
            if name.startswith("test_") and callable(getattr(module, name))]


def _run_module(title, module, verbose=False):
    """Devuelve (pasados, fallidos) de un módulo."""
    print(f"\n{EMOJIS['lab']} {title}")
    print(SEPARATOR_MINOR)
    passed = failed = 0
    for name, func in _module_tests(module):
        try:
            func()
        except AssertionError as e:
            print(f"{EMOJIS['error']} {name}: {e or 'aserción fallida'}")
            failed += 1
        except Exception as e:
            print(f"{EMOJIS['error']} {name}: {type(e).__name__}: {e}")
            if verbose:
                traceback.print_exc()
            failed += 1
        else:
            print(f"{EMOJIS['success']} {name}")
            passed += 1
    return passed, failed


def run_all_tests(verbose=False):
    print(SEPARATOR_MAJOR)
    print("🚀 TESTS DE COCYCLE")
    print(SEPARATOR_MAJOR)

    tally = [(title, *_run_module(title, module, verbose)) for title, module in MODULES]
    passed = sum(p for _, p, _ in tally)
    failed = sum(f for _, _, f in tally)

    print("\n" + SEPARATOR_MAJOR)
    print("📊 RESUMEN")
    print(SEPARATOR_MAJOR)
    for title, p, f in tally:
        mark = EMOJIS['success'] if f == 0 else EMOJIS['error']
        print(f"{mark} {title:<24} {p}/{p + f}")
    print(SEPARATOR_MINOR)
    if failed:
        print(f"{EMOJIS['warning']}  {failed} de {passed + failed} tests fallaron")
    else:
        print(f"🎉 {passed} tests pasaron")
    return failed == 0


if __name__ == "__main__":
    sys.exit(0 if run_all_tests(verbose="-v" in sys.argv[1:]) else 1)
