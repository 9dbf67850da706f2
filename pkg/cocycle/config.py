#!/usr/bin/env python3
"""
Configuración unificada del sistema Cocycle.
Constantes, tolerancias, emojis, plantillas de mensajes y rutas centralizadas.
"""

import os
from typing import Dict

# =============================================================================
# DIRECTORIOS
# =============================================================================

# Directorio raíz del proyecto (donde está el código)
COCYCLE_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

# Directorio de datos: settings.yaml y fixtures
# Por defecto usa data/ junto al paquete, pero puede configurarse
DATA_DIRECTORY = os.environ.get('COCYCLE_DATA_DIR', os.path.join(COCYCLE_ROOT, 'data'))

SETTINGS_FILENAME = "settings.yaml"
FIXTURES_DIRNAME = "fixtures"

# =============================================================================
# VERSIÓN
# =============================================================================

VERSION = "1.0.0"
VERSION_NAME = "Ciclos, cociclos y proyecciones oblicuas"

# =============================================================================
# TOLERANCIAS Y LÍMITES
# =============================================================================

# Tolerancia relativa para toda comparación en coma flotante
FLOAT_TOLERANCE = 1e-9

# Un autovalor flotante se considera "igual a 1" dentro de esta ventana
UNIT_EIGENVALUE_WINDOW = 1e-6

# Máximo de aristas para la enumeración por fuerza bruta de árboles
SPANNING_TREE_GUARD = 24

# Reintentos por semilla al generar proyecciones oblicuas aleatorias
GENERATION_RETRIES = 64

# =============================================================================
# SUITE ALEATORIA
# =============================================================================

RANDOM_SUITE_DEFAULTS: Dict[str, int] = {
    "cases": 200,
    "seed": 0,
    "max_v": 8,
    "max_e": 14,
    "lab_max_n": 8,
    "entry_range": 3,        # enteros en [-3, 3] para A, B y estados
    "max_denominator": 4,    # denominadores de estados racionales
}

# =============================================================================
# NOMBRES CANÓNICOS
# =============================================================================

# Vértice ápice del grafo cono y plantilla de ids de sus aristas
CONE_APEX_ID = "v0"
CONE_EDGE_TEMPLATE = "{apex}->{vertex}"

# Prefijo de los vértices del grafo dual (una cara por vértice)
DUAL_VERTEX_PREFIX = "f"

# Marca de extremo de llegada en un sistema de rotaciones ("-e5")
HEAD_END_MARK = "-"

# =============================================================================
# CÓDIGOS DE SALIDA
# =============================================================================

EXIT_CODES: Dict[str, int] = {
    'ok': 0,
    'verification_failed': 1,
    'input_error': 2,
}

# =============================================================================
# EMOJIS DEL SISTEMA
# =============================================================================

EMOJIS = {
    # Estado
    'success': "✅",
    'error': "❌",
    'warning': "⚠️",
    'info': "ℹ️",

    # Secciones
    'graph': "🕸️",
    'matrix': "🧮",
    'spectrum': "📈",
    'tree': "🌳",
    'dual': "🔁",
    'thermo': "🔥",
    'lab': "🧪",
    'timer': "⏱️",
}

# =============================================================================
# MENSAJES DEL SISTEMA
# =============================================================================

MESSAGES = {
    # Errores
    'input_error': "❌ Error de entrada: {error}",
    'file_not_found': "❌ Archivo no encontrado: {filename}",
    'broken_identity': "❌ Identidad rota: {error}",
    'missing_embedding': "el grafo no trae 'rotations' ni 'faces'",
    'bad_assignment': "asignación inválida '{text}' (se espera seccion.clave=valor)",

    # Resultados
    'check_passed': "  ✅ {name}",
    'check_failed': "  ❌ {name}: {detail}",
    'all_passed': "✅ Todas las comprobaciones pasaron ({count})",
    'some_failed': "❌ {failed} de {count} comprobaciones fallaron",
    'note': "  ℹ️  {note}",

    # Información
    'loaded_graph': "🕸️ Grafo: |V|={vertices}, |E|={edges}, |C|={cycles}",
    'tree_header': "Árbol: {tree}  |  cuerdas: {chords}",
    'permutation_header': "🔢 Orden canónico: {order}",
    'elapsed': "Tiempo: {seconds:.3f} s",
    'suite_progress': "🔄 Caso {index}/{total}...",
}

# =============================================================================
# SEPARADORES
# =============================================================================

SEPARATOR_MAJOR = "=" * 60
SEPARATOR_MINOR = "-" * 60
