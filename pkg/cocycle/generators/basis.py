"""
Bases fundamentales de ciclos y cociclos inducidas por un árbol generador.

Todos los vectores se expresan en orden canónico: primero las cocuerdas (aristas
del árbol) y después las cuerdas, cada grupo en orden de usuario.
"""

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import networkx as nx

from cocycle.core.exceptions import MatrixError, NotAChord, NotACochord
from cocycle.core.linalg import RationalMatrix, unit_vector
from cocycle.core.reports import VerificationReport
from cocycle.models.graph_models import OrientedGraph, TreeSelection
from cocycle.utils.graph_core import incidence_matrix

Vector = Tuple[int, ...]


@dataclass(frozen=True)
class BasisBundle:
    """Árbol elegido junto con sus ciclos y cociclos fundamentales."""

    graph: OrientedGraph
    tree: TreeSelection
    cycle_vectors: Tuple[Vector, ...]
    cocycle_vectors: Tuple[Vector, ...]

    @property
    def size(self) -> int:
        return self.graph.num_edges

    @property
    def num_cochords(self) -> int:
        return len(self.tree.cochord_edges)

    @property
    def num_chords(self) -> int:
        return len(self.tree.chord_edges)

    def cycle(self, chord: str) -> Vector:
        return self.cycle_vectors[self.tree.chord_index(chord)]

    def cocycle(self, cochord: str) -> Vector:
        return self.cocycle_vectors[self.tree.cochord_index(cochord)]

    def cycle_matrix(self) -> RationalMatrix:
        """|C| x |E|, una fila por ciclo."""
        return RationalMatrix.from_rows(self.cycle_vectors, cols=self.size)

    def cocycle_matrix(self) -> RationalMatrix:
        """(|V| - 1) x |E|, una fila por cociclo."""
        return RationalMatrix.from_rows(self.cocycle_vectors, cols=self.size)

    def incidence(self) -> RationalMatrix:
        """Matriz de incidencia con las columnas en orden canónico."""
        user = incidence_matrix(self.graph)
        columns = [self.graph.edge_index(e) for e in self.tree.permutation]
        return user.submatrix(range(user.rows), columns)

    def to_user_order(self, vector: Sequence) -> Tuple:
        """Reordena un vector canónico al orden de aristas del usuario."""
        by_edge = dict(zip(self.tree.permutation, vector))
        return tuple(by_edge[e] for e in self.graph.edge_ids)

    def user_permutation(self) -> List[int]:
        """Posición canónica de cada arista en orden de usuario."""
        canonical = {e: i for i, e in enumerate(self.tree.permutation)}
        return [canonical[e] for e in self.graph.edge_ids]

    def matrix_to_user_order(self, m: RationalMatrix) -> RationalMatrix:
        """Permuta filas y columnas de una matriz |E| x |E| canónica al orden de usuario."""
        order = self.user_permutation()
        return m.submatrix(order, order)

    def to_dict(self) -> Dict[str, object]:
        return {
            'tree': self.tree.to_dict(),
            'cycles': {e: list(v) for e, v in zip(self.tree.chord_edges, self.cycle_vectors)},
            'cocycles': {e: list(v) for e, v in zip(self.tree.cochord_edges, self.cocycle_vectors)},
        }


def _tree_graph(g: OrientedGraph, t: TreeSelection) -> nx.Graph:
    tree = nx.Graph()
    tree.add_nodes_from(g.vertices)
    for edge_id in t.cochord_edges:
        e = g.edge(edge_id)
        tree.add_edge(e.tail, e.head, id=edge_id)
    return tree


def fundamental_cycle(g: OrientedGraph, t: TreeSelection, chord: str) -> Vector:
    """
    Ciclo que cierra la cuerda: +1 en la cuerda y +-1 en el camino del árbol de
    head(cuerda) a tail(cuerda), +1 cuando se recorre en el sentido de la arista.
    """
    if not t.is_chord(chord):
        raise NotAChord(f"{chord} no es una cuerda")
    e = g.edge(chord)
    values: Dict[str, int] = {chord: 1}
    if not e.is_loop:
        tree = _tree_graph(g, t)
        path = nx.shortest_path(tree, e.head, e.tail)
        for a, b in zip(path, path[1:]):
            tree_edge = g.edge(tree[a][b]['id'])
            values[tree_edge.id] = 1 if (tree_edge.tail, tree_edge.head) == (a, b) else -1
    return tuple(values.get(edge_id, 0) for edge_id in t.permutation)


def fundamental_cocycle(g: OrientedGraph, t: TreeSelection, cochord: str) -> Vector:
    """
    Cociclo que abre la cocuerda: +1 en aristas de la componente fuente
    (la de tail(cocuerda)) a la sumidero, -1 en sentido contrario.
    """
    if cochord not in t.tree_edges:
        raise NotACochord(f"{cochord} no es una cocuerda")
    e = g.edge(cochord)
    tree = _tree_graph(g, t)
    tree.remove_edge(e.tail, e.head)
    source = nx.node_connected_component(tree, e.tail)

    def sign(edge_id: str) -> int:
        edge = g.edge(edge_id)
        tail_in, head_in = edge.tail in source, edge.head in source
        if tail_in and not head_in:
            return 1
        if head_in and not tail_in:
            return -1
        return 0

    return tuple(sign(edge_id) for edge_id in t.permutation)


def verify_basis(b: BasisBundle) -> VerificationReport:
    """
    Relaciones de ortogonalidad entre aristas, ciclos y cociclos, pertenencia al
    núcleo y a las filas de la incidencia, y rango completo de las dos
    descomposiciones (ciclos + cocuerdas, cociclos + cuerdas).
    """
    report = VerificationReport("Base de ciclos y cociclos")
    n, m = b.num_cochords, b.size
    C, D = b.cycle_matrix(), b.cocycle_matrix()
    boundary = b.incidence()

    report.check_matrix("ciclos en el núcleo de la incidencia", boundary @ C.T,
                        RationalMatrix.zeros(boundary.rows, C.rows))
    report.check_equal("cociclos en el espacio de filas de la incidencia",
                       RationalMatrix.block([[boundary], [D]]).rank() if D.rows else boundary.rank(),
                       boundary.rank())
    report.check_matrix("<c_alpha|c_mu> = 0", C @ D.T, RationalMatrix.zeros(C.rows, D.rows))
    chords = list(range(n, m))
    cochords = list(range(n))
    report.check_matrix("<e_alpha|c_alpha'> = delta", C.submatrix(range(C.rows), chords),
                        RationalMatrix.identity(C.rows))
    report.check_matrix("<e_mu|c_mu'> = delta", D.submatrix(range(D.rows), cochords),
                        RationalMatrix.identity(D.rows))
    report.add("entradas en {-1, 0, 1}",
               all(x in (-1, 0, 1) for v in b.cycle_vectors + b.cocycle_vectors for x in v))

    cochord_units = [unit_vector(m, i) for i in cochords]
    chord_units = [unit_vector(m, i) for i in chords]
    report.check_equal("ciclos + cocuerdas generan el espacio de aristas",
                       RationalMatrix.from_rows(list(b.cycle_vectors) + cochord_units, cols=m).rank(), m)
    report.check_equal("cociclos + cuerdas generan el espacio de aristas",
                       RationalMatrix.from_rows(list(b.cocycle_vectors) + chord_units, cols=m).rank(), m)
    report.check_equal("rango de la incidencia = |V| - 1", boundary.rank(), b.graph.num_vertices - 1)
    return report


def build_basis(g: OrientedGraph, t: TreeSelection) -> BasisBundle:
    """Ciclos y cociclos fundamentales del árbol, verificados antes de devolverlos."""
    bundle = BasisBundle(
        graph=g,
        tree=t,
        cycle_vectors=tuple(fundamental_cycle(g, t, chord) for chord in t.chord_edges),
        cocycle_vectors=tuple(fundamental_cocycle(g, t, cochord) for cochord in t.cochord_edges),
    )
    report = verify_basis(bundle)
    if not report.passed:
        failure = report.failures[0]
        raise MatrixError(f"Base inconsistente: {failure.name} ({failure.detail})")
    return bundle
