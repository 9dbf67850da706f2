"""
Modelos de datos para grafos orientados, árboles generadores, embebimientos y
estados termodinámicos.
Permite cargar documentos JSON/YAML, trabajar con objetos Python inmutables y
serializarlos de nuevo a diccionarios.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx
import yaml

from cocycle.config import HEAD_END_MARK
from cocycle.core.exceptions import (
    Disconnected,
    DocumentError,
    DuplicateId,
    NotAChord,
    NotACochord,
    UnknownEdge,
    UnknownEndpoint,
)


@dataclass(frozen=True)
class Edge:
    """Arista orientada tail -> head; un lazo tiene tail == head."""

    id: str
    tail: str
    head: str

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head

    def reversed(self) -> "Edge":
        return Edge(self.id, self.head, self.tail)

    def to_dict(self) -> Dict[str, str]:
        return {'id': self.id, 'tail': self.tail, 'head': self.head}

    def __repr__(self):
        return f"Edge({self.id}: {self.tail}->{self.head})"


class OrientedGraph:
    """Multigrafo orientado y conexo; el orden de vértices y aristas es el del usuario."""

    def __init__(self, vertices: Sequence[str], edges: Sequence[Edge]):
        self.vertices: Tuple[str, ...] = tuple(vertices)
        self.edges: Tuple[Edge, ...] = tuple(edges)
        self._validate()
        self._vertex_index = {v: i for i, v in enumerate(self.vertices)}
        self._edge_index = {e.id: i for i, e in enumerate(self.edges)}

    def _validate(self) -> None:
        if not self.vertices:
            raise DocumentError("El grafo necesita al menos un vértice")
        seen = set()
        for v in self.vertices:
            if v in seen:
                raise DuplicateId(f"Vértice repetido: {v}")
            seen.add(v)
        edge_ids = set()
        for e in self.edges:
            if e.id in edge_ids:
                raise DuplicateId(f"Arista repetida: {e.id}")
            edge_ids.add(e.id)
            for endpoint in (e.tail, e.head):
                if endpoint not in seen:
                    raise UnknownEndpoint(f"La arista {e.id} nombra el vértice inexistente {endpoint}")
        if not nx.is_connected(self.to_networkx()):
            raise Disconnected("El grafo no es conexo")

    # ------------------------------------------------------------------
    # Consulta
    # ------------------------------------------------------------------
    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def cyclomatic_number(self) -> int:
        """|C| = |E| - |V| + 1."""
        return self.num_edges - self.num_vertices + 1

    @property
    def edge_ids(self) -> Tuple[str, ...]:
        return tuple(e.id for e in self.edges)

    def edge(self, edge_id: str) -> Edge:
        try:
            return self.edges[self._edge_index[edge_id]]
        except KeyError:
            raise UnknownEdge(f"Arista desconocida: {edge_id}") from None

    def edge_index(self, edge_id: str) -> int:
        if edge_id not in self._edge_index:
            raise UnknownEdge(f"Arista desconocida: {edge_id}")
        return self._edge_index[edge_id]

    def vertex_index(self, vertex: str) -> int:
        return self._vertex_index[vertex]

    def has_edge(self, edge_id: str) -> bool:
        return edge_id in self._edge_index

    def is_simple(self) -> bool:
        """Sin lazos ni aristas paralelas (en cualquier sentido)."""
        pairs = set()
        for e in self.edges:
            if e.is_loop:
                return False
            pair = frozenset((e.tail, e.head))
            if pair in pairs:
                return False
            pairs.add(pair)
        return True

    def to_networkx(self, edge_ids: Optional[Iterable[str]] = None,
                    skip_loops: bool = False) -> nx.MultiGraph:
        """Multigrafo no dirigido de NetworkX con las aristas indexadas por id."""
        selected = None if edge_ids is None else set(edge_ids)
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        for e in self.edges:
            if selected is not None and e.id not in selected:
                continue
            if skip_loops and e.is_loop:
                continue
            graph.add_edge(e.tail, e.head, key=e.id)
        return graph

    def reversed(self) -> "OrientedGraph":
        """Mismo grafo con todas las orientaciones invertidas."""
        return OrientedGraph(self.vertices, [e.reversed() for e in self.edges])

    def to_dict(self) -> Dict[str, Any]:
        return {
            'vertices': list(self.vertices),
            'edges': [e.to_dict() for e in self.edges],
        }

    def __eq__(self, other) -> bool:
        if not isinstance(other, OrientedGraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"OrientedGraph(|V|={self.num_vertices}, |E|={self.num_edges})"


@dataclass(frozen=True)
class TreeSelection:
    """
    Árbol generador elegido.

    ``cochord_edges`` y ``chord_edges`` están en orden de usuario; la
    permutación canónica es cocuerdas primero y luego cuerdas.
    """

    tree_edges: frozenset
    cochord_edges: Tuple[str, ...]
    chord_edges: Tuple[str, ...]

    @property
    def permutation(self) -> Tuple[str, ...]:
        """Índice canónico -> id de arista de usuario."""
        return self.cochord_edges + self.chord_edges

    def canonical_index(self, edge_id: str) -> int:
        try:
            return self.permutation.index(edge_id)
        except ValueError:
            raise UnknownEdge(f"Arista desconocida: {edge_id}") from None

    def chord_index(self, edge_id: str) -> int:
        if edge_id not in self.chord_edges:
            raise NotAChord(f"{edge_id} pertenece al árbol")
        return self.chord_edges.index(edge_id)

    def cochord_index(self, edge_id: str) -> int:
        if edge_id not in self.tree_edges:
            raise NotACochord(f"{edge_id} no pertenece al árbol")
        return self.cochord_edges.index(edge_id)

    def is_chord(self, edge_id: str) -> bool:
        return edge_id in self.chord_edges

    def to_dict(self) -> Dict[str, Any]:
        return {
            'tree': list(self.cochord_edges),
            'chords': list(self.chord_edges),
            'permutation': list(self.permutation),
        }

    def __repr__(self):
        return f"TreeSelection(tree={list(self.cochord_edges)}, chords={list(self.chord_edges)})"


@dataclass(frozen=True)
class PlanarEmbedding:
    """
    Embebimiento combinatorio: rotaciones por vértice o lista de caras.

    En una rotación, "e" es el extremo de salida de la arista e y "-e" el de
    llegada. En una cara, "e" recorre la arista en su sentido y "-e" al revés.
    """

    rotations: Optional[Dict[str, Tuple[str, ...]]] = None
    faces: Optional[Tuple[Tuple[str, ...], ...]] = None

    @property
    def is_empty(self) -> bool:
        return self.rotations is None and self.faces is None

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {}
        if self.rotations is not None:
            result['rotations'] = {v: list(ends) for v, ends in self.rotations.items()}
        if self.faces is not None:
            result['faces'] = [list(face) for face in self.faces]
        return result


def split_end(token: str) -> Tuple[str, bool]:
    """'-e5' -> ('e5', True); 'e5' -> ('e5', False). True indica extremo de llegada."""
    if token.startswith(HEAD_END_MARK):
        return token[len(HEAD_END_MARK):], True
    return token, False


def make_end(edge_id: str, at_head: bool) -> str:
    return f"{HEAD_END_MARK}{edge_id}" if at_head else edge_id


@dataclass(frozen=True)
class ThermoState:
    """Corrientes y fuerzas por arista en orden canónico (cocuerdas, cuerdas)."""

    currents: Tuple[Fraction, ...]
    forces: Tuple[Fraction, ...]

    @classmethod
    def from_mappings(cls, tree: TreeSelection, currents: Mapping[str, Fraction],
                      forces: Mapping[str, Fraction]) -> "ThermoState":
        order = tree.permutation
        return cls(tuple(Fraction(currents.get(e, 0)) for e in order),
                   tuple(Fraction(forces.get(e, 0)) for e in order))

    @classmethod
    def zero(cls, size: int) -> "ThermoState":
        return cls((Fraction(0),) * size, (Fraction(0),) * size)

    def to_dict(self, tree: TreeSelection) -> Dict[str, Dict[str, str]]:
        return {
            'currents': {e: str(x) for e, x in zip(tree.permutation, self.currents)},
            'forces': {e: str(x) for e, x in zip(tree.permutation, self.forces)},
        }


@dataclass
class GraphDocument:
    """Contenido completo de un documento de grafo."""

    graph: OrientedGraph
    tree: Optional[Tuple[str, ...]] = None
    embedding: PlanarEmbedding = field(default_factory=PlanarEmbedding)

    def to_dict(self) -> Dict[str, Any]:
        data = self.graph.to_dict()
        if self.tree is not None:
            data['tree'] = list(self.tree)
        data.update(self.embedding.to_dict())
        return data


# =============================================================================
# CARGA DE DOCUMENTOS
# =============================================================================

DocumentLike = Union[str, Mapping[str, Any]]


def _parse(document: DocumentLike) -> Mapping[str, Any]:
    if isinstance(document, Mapping):
        return document
    try:
        data = yaml.safe_load(document)
    except yaml.YAMLError as exc:
        raise DocumentError(f"Documento ilegible: {exc}") from exc
    if not isinstance(data, Mapping):
        raise DocumentError("El documento debe ser un objeto")
    return data


def _string_list(data: Any, what: str) -> List[str]:
    if not isinstance(data, list) or not all(isinstance(x, str) for x in data):
        raise DocumentError(f"'{what}' debe ser una lista de cadenas")
    return list(data)


def read_document(path: str) -> Dict[str, Any]:
    """Lee un archivo JSON o YAML (JSON es YAML válido para ``safe_load``)."""
    if not os.path.exists(path):
        raise FileNotFoundError(path)
    with open(path, 'r', encoding='utf-8') as f:
        return dict(_parse(f.read()))


def load_document(document: DocumentLike) -> GraphDocument:
    """Valida un documento de grafo y devuelve grafo, árbol y embebimiento opcionales."""
    data = _parse(document)
    vertices = _string_list(data.get('vertices'), 'vertices')

    raw_edges = data.get('edges')
    if not isinstance(raw_edges, list):
        raise DocumentError("'edges' debe ser una lista")
    edges = []
    for item in raw_edges:
        if not isinstance(item, Mapping) or not all(isinstance(item.get(k), str) for k in ('id', 'tail', 'head')):
            raise DocumentError(f"Arista mal formada: {item!r}")
        edges.append(Edge(item['id'], item['tail'], item['head']))

    graph = OrientedGraph(vertices, edges)

    tree = None
    if data.get('tree') is not None:
        tree = tuple(_string_list(data['tree'], 'tree'))

    rotations = None
    if data.get('rotations') is not None:
        if not isinstance(data['rotations'], Mapping):
            raise DocumentError("'rotations' debe ser un objeto vértice -> lista")
        rotations = {str(v): tuple(_string_list(ends, f'rotations.{v}'))
                     for v, ends in data['rotations'].items()}

    faces = None
    if data.get('faces') is not None:
        if not isinstance(data['faces'], list):
            raise DocumentError("'faces' debe ser una lista de listas")
        faces = tuple(tuple(_string_list(face, 'faces')) for face in data['faces'])

    return GraphDocument(graph, tree, PlanarEmbedding(rotations, faces))


def load_graph(document: DocumentLike) -> OrientedGraph:
    """Carga y valida un ``OrientedGraph`` desde un documento JSON/YAML o un dict."""
    return load_document(document).graph


def load_state(document: DocumentLike, graph: OrientedGraph,
               tree: TreeSelection) -> ThermoState:
    """
    Carga un estado {"currents": {...}, "forces": {...}}.

    Los valores son enteros o cadenas "p/q"; las aristas ausentes valen 0.
    """
    data = _parse(document)

    def read_vector(key: str) -> Dict[str, Fraction]:
        raw = data.get(key) or {}
        if not isinstance(raw, Mapping):
            raise DocumentError(f"'{key}' debe ser un objeto arista -> valor")
        vector = {}
        for edge_id, value in raw.items():
            if not graph.has_edge(str(edge_id)):
                raise UnknownEdge(f"Arista desconocida en '{key}': {edge_id}")
            if isinstance(value, bool) or not isinstance(value, (int, str)):
                raise DocumentError(f"Valor no racional exacto en '{key}.{edge_id}': {value!r}")
            try:
                vector[str(edge_id)] = Fraction(value)
            except (ValueError, ZeroDivisionError) as exc:
                raise DocumentError(f"Valor inválido en '{key}.{edge_id}': {value!r}") from exc
        return vector

    return ThermoState.from_mappings(tree, read_vector('currents'), read_vector('forces'))
