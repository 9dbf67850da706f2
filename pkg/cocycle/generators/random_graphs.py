"""
Generadores aleatorios con semilla: multigrafos conexos, grafos simples,
árboles generadores aleatorios, la familia "toda cuerda es un lazo" y estados
racionales. Todo depende sólo del ``numpy.random.Generator`` recibido.
"""

from fractions import Fraction
from typing import List, Tuple

import numpy as np
from networkx.utils import UnionFind

from cocycle.config import RANDOM_SUITE_DEFAULTS
from cocycle.models.graph_models import Edge, OrientedGraph, ThermoState, TreeSelection
from cocycle.utils.graph_core import validate_tree


def _vertices(n: int) -> List[str]:
    return [f"v{i + 1}" for i in range(n)]


def _random_tree_pairs(rng: np.random.Generator, n: int) -> List[Tuple[int, int]]:
    """Cada vértice k > 0 se une a uno anterior elegido al azar, con orientación aleatoria."""
    pairs = []
    for k in range(1, n):
        other = int(rng.integers(0, k))
        pairs.append((k, other) if rng.random() < 0.5 else (other, k))
    return pairs


def _assemble(rng: np.random.Generator, n: int, pairs: List[Tuple[int, int]]) -> OrientedGraph:
    order = rng.permutation(len(pairs))
    names = _vertices(n)
    edges = [Edge(f"e{i + 1}", names[pairs[k][0]], names[pairs[k][1]]) for i, k in enumerate(order)]
    return OrientedGraph(names, edges)


def random_connected_multigraph(rng: np.random.Generator,
                                max_v: int = RANDOM_SUITE_DEFAULTS['max_v'],
                                max_e: int = RANDOM_SUITE_DEFAULTS['max_e'],
                                allow_loops: bool = True) -> OrientedGraph:
    """Multigrafo conexo con |V| <= max_v y |E| <= max_e; admite lazos y paralelas."""
    n = int(rng.integers(1, max_v + 1))
    n = min(n, max_e + 1)
    pairs = _random_tree_pairs(rng, n)
    m = int(rng.integers(max(1, n - 1), max(1, max_e) + 1))
    while len(pairs) < m:
        tail, head = int(rng.integers(0, n)), int(rng.integers(0, n))
        if tail == head and not allow_loops:
            if n == 1:
                break
            continue
        pairs.append((tail, head))
    return _assemble(rng, n, pairs)


def random_simple_graph(rng: np.random.Generator,
                        max_v: int = RANDOM_SUITE_DEFAULTS['max_v'],
                        max_e: int = RANDOM_SUITE_DEFAULTS['max_e']) -> OrientedGraph:
    """Grafo simple conexo (sin lazos ni aristas paralelas) con al menos dos vértices."""
    n = int(rng.integers(2, max(2, max_v) + 1))
    pairs = _random_tree_pairs(rng, n)
    used = {frozenset(p) for p in pairs}
    free = [(a, b) for a in range(n) for b in range(a + 1, n) if frozenset((a, b)) not in used]
    extra = int(rng.integers(0, max(0, min(len(free), max_e - len(pairs))) + 1))
    for k in rng.permutation(len(free))[:extra]:
        a, b = free[int(k)]
        pairs.append((a, b) if rng.random() < 0.5 else (b, a))
    return _assemble(rng, n, pairs)


def loop_family_graph(rng: np.random.Generator,
                      max_v: int = RANDOM_SUITE_DEFAULTS['max_v'],
                      max_loops: int = 4) -> OrientedGraph:
    """Árbol aleatorio más lazos: toda cuerda es un lazo y las proyecciones son ortogonales."""
    n = int(rng.integers(1, max_v + 1))
    pairs = _random_tree_pairs(rng, n)
    for _ in range(int(rng.integers(1, max_loops + 1))):
        v = int(rng.integers(0, n))
        pairs.append((v, v))
    return _assemble(rng, n, pairs)


def random_spanning_tree(g: OrientedGraph, rng: np.random.Generator) -> TreeSelection:
    """Kruskal con aristas barajadas."""
    components = UnionFind(g.vertices)
    chosen = []
    for k in rng.permutation(g.num_edges):
        e = g.edges[int(k)]
        if e.is_loop or components[e.tail] == components[e.head]:
            continue
        components.union(e.tail, e.head)
        chosen.append(e.id)
    return validate_tree(g, chosen)


def random_fraction(rng: np.random.Generator,
                    entry_range: int = RANDOM_SUITE_DEFAULTS['entry_range'],
                    max_denominator: int = RANDOM_SUITE_DEFAULTS['max_denominator']) -> Fraction:
    numerator = int(rng.integers(-entry_range, entry_range + 1))
    denominator = int(rng.integers(1, max_denominator + 1))
    return Fraction(numerator, denominator)


def random_state(rng: np.random.Generator, size: int,
                 entry_range: int = RANDOM_SUITE_DEFAULTS['entry_range'],
                 max_denominator: int = RANDOM_SUITE_DEFAULTS['max_denominator']) -> ThermoState:
    """Corrientes y fuerzas racionales independientes."""
    currents = tuple(random_fraction(rng, entry_range, max_denominator) for _ in range(size))
    forces = tuple(random_fraction(rng, entry_range, max_denominator) for _ in range(size))
    return ThermoState(currents, forces)
