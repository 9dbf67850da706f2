"""
Primitivas de grafos: matriz de incidencia, árbol generador por defecto,
validación de árboles y enumeración por fuerza bruta.
"""

from itertools import combinations
from typing import Iterable

import networkx as nx
from networkx.utils import UnionFind

from cocycle.config import SPANNING_TREE_GUARD
from cocycle.core.exceptions import (
    ContainsCycle,
    ContainsSelfLoop,
    NotSpanning,
    TooLarge,
    UnknownEdge,
    WrongCardinality,
)
from cocycle.core.linalg import RationalMatrix
from cocycle.models.graph_models import OrientedGraph, TreeSelection


def incidence_matrix(g: OrientedGraph) -> RationalMatrix:
    """
    Matriz |V| x |E| en orden de usuario: +1 si la arista llega al vértice,
    -1 si sale de él. La columna de un lazo es nula.
    """
    rows = [[0] * g.num_edges for _ in g.vertices]
    for j, e in enumerate(g.edges):
        if e.is_loop:
            continue
        rows[g.vertex_index(e.head)][j] += 1
        rows[g.vertex_index(e.tail)][j] -= 1
    return RationalMatrix.from_rows(rows, cols=g.num_edges)


def _selection(g: OrientedGraph, tree_edges: Iterable[str]) -> TreeSelection:
    tree = frozenset(tree_edges)
    cochords = tuple(e.id for e in g.edges if e.id in tree)
    chords = tuple(e.id for e in g.edges if e.id not in tree)
    return TreeSelection(tree, cochords, chords)


def default_spanning_tree(g: OrientedGraph) -> TreeSelection:
    """
    Árbol DFS determinista: parte del primer vértice y recorre las aristas en
    orden de usuario, ignorando lazos. Entre aristas paralelas gana la primera.
    """
    multigraph = g.to_networkx(skip_loops=True)
    tree = []
    for u, v in nx.dfs_edges(multigraph, source=g.vertices[0]):
        # Las claves de NetworkX conservan el orden de inserción (orden de usuario)
        tree.append(next(iter(multigraph[u][v])))
    return _selection(g, tree)


def validate_tree(g: OrientedGraph, edge_ids: Iterable[str]) -> TreeSelection:
    """
    Valida un conjunto de aristas como árbol generador.

    Raises:
        UnknownEdge, ContainsSelfLoop, WrongCardinality, NotSpanning, ContainsCycle
    """
    chosen = list(dict.fromkeys(edge_ids))
    for edge_id in chosen:
        if not g.has_edge(edge_id):
            raise UnknownEdge(f"Arista desconocida: {edge_id}")
    for edge_id in chosen:
        if g.edge(edge_id).is_loop:
            raise ContainsSelfLoop(f"El lazo {edge_id} no puede pertenecer a un árbol")
    if len(chosen) != g.num_vertices - 1:
        raise WrongCardinality(f"Se esperaban {g.num_vertices - 1} aristas y hay {len(chosen)}")

    if g.num_vertices > 1:
        touched = {v for edge_id in chosen for v in (g.edge(edge_id).tail, g.edge(edge_id).head)}
        missing = [v for v in g.vertices if v not in touched]
        if missing:
            raise NotSpanning(f"Vértices fuera del árbol: {', '.join(missing)}")

    components = UnionFind(g.vertices)
    for edge_id in chosen:
        e = g.edge(edge_id)
        if components[e.tail] == components[e.head]:
            raise ContainsCycle(f"La arista {edge_id} cierra un ciclo")
        components.union(e.tail, e.head)
    return _selection(g, chosen)


def select_tree(g: OrientedGraph, edge_ids=None) -> TreeSelection:
    """Árbol explícito validado, o el árbol DFS por defecto si no se indica."""
    if edge_ids is None:
        return default_spanning_tree(g)
    return validate_tree(g, edge_ids)


def is_spanning_tree(g: OrientedGraph, edge_ids: Iterable[str]) -> bool:
    """True si las aristas (sin lazos) forman un árbol generador."""
    components = UnionFind(g.vertices)
    count = 0
    for edge_id in edge_ids:
        e = g.edge(edge_id)
        if e.is_loop or components[e.tail] == components[e.head]:
            return False
        components.union(e.tail, e.head)
        count += 1
    return count == g.num_vertices - 1


def enumerate_spanning_trees(g: OrientedGraph, guard: int = SPANNING_TREE_GUARD) -> int:
    """
    Cuenta los árboles generadores probando todos los subconjuntos de |V| - 1
    aristas.

    Raises:
        TooLarge: si |E| supera ``guard``
    """
    if g.num_edges > guard:
        raise TooLarge(f"|E| = {g.num_edges} supera el límite de fuerza bruta ({guard})")
    candidates = [e.id for e in g.edges if not e.is_loop]
    return sum(1 for subset in combinations(candidates, g.num_vertices - 1)
               if is_spanning_tree(g, subset))
