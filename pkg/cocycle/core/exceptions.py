#!/usr/bin/env python3
"""
Jerarquía de excepciones del sistema Cocycle.

Todas derivan de ``CocycleError``, que a su vez es un ``ValueError``: las
operaciones señalan entradas inválidas igual que el resto del código base.
Las verificaciones de identidades NO lanzan: devuelven informes.
"""


class CocycleError(ValueError):
    """Error base de Cocycle."""


# =============================================================================
# GRAFOS Y DOCUMENTOS
# =============================================================================

class GraphError(CocycleError):
    """Grafo mal formado."""


class DuplicateId(GraphError):
    """Id de vértice o de arista repetido."""


class UnknownEndpoint(GraphError):
    """Una arista nombra un vértice inexistente."""


class UnknownEdge(GraphError):
    """Se referencia un id de arista que no existe en el grafo."""


class Disconnected(GraphError):
    """El grafo no es conexo (como grafo no dirigido)."""


class NotSimple(GraphError):
    """El grafo tiene lazos o aristas múltiples."""


class DocumentError(GraphError):
    """El documento JSON/YAML no respeta el esquema."""


# =============================================================================
# ÁRBOLES GENERADORES
# =============================================================================

class TreeError(CocycleError):
    """Selección de árbol inválida."""


class WrongCardinality(TreeError):
    """El árbol no tiene |V| - 1 aristas."""


class ContainsCycle(TreeError):
    """El conjunto de aristas encierra un ciclo."""


class NotSpanning(TreeError):
    """El conjunto de aristas no alcanza todos los vértices."""


class ContainsSelfLoop(TreeError):
    """Un lazo nunca pertenece a un árbol."""


class NotAChord(TreeError):
    """La arista pertenece al árbol."""


class NotACochord(TreeError):
    """La arista no pertenece al árbol."""


# =============================================================================
# ÁLGEBRA LINEAL
# =============================================================================

class MatrixError(CocycleError):
    """Operación matricial inválida."""


class NotSquare(MatrixError):
    """Se esperaba una matriz cuadrada."""


class Singular(MatrixError):
    """La matriz no es invertible."""


class NonInteger(MatrixError):
    """Se esperaban entradas enteras."""


class DimensionMismatch(MatrixError):
    """Dimensiones incompatibles."""


class NoConvergence(MatrixError):
    """El resolvedor de autovalores no convergió."""


# =============================================================================
# EMBEBIMIENTOS PLANARES
# =============================================================================

class EmbeddingError(CocycleError):
    """Embebimiento combinatorio inválido."""


class BadRotation(EmbeddingError):
    """Falta o sobra un extremo de arista en el sistema de rotaciones."""


class BadFaces(EmbeddingError):
    """La lista de caras no describe un embebimiento válido."""


class EulerViolation(EmbeddingError):
    """|V| - |E| + |F| != 2."""


class NonSpanningCotree(EmbeddingError):
    """El coárbol no es árbol generador del dual."""


# =============================================================================
# VARIOS
# =============================================================================

class TooLarge(CocycleError):
    """Instancia por encima del límite de fuerza bruta."""


class PreconditionViolation(CocycleError):
    """Parámetros fuera del dominio de la operación."""


class GenerationFailed(CocycleError):
    """Se agotaron los reintentos de generación aleatoria."""
