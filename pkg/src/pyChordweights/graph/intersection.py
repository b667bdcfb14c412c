# coding: utf-8

"""Python module for marked intersection graphs and Lando's graph bialgebra."""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Dict, FrozenSet, Iterable, List, Set, Tuple

import networkx as nx

from pyChordweights.chord.combination import FormalCombination
from pyChordweights.chord.diagram import MarkedChordDiagram
from pyChordweights.utils import PreconditionError, subsets

logger = logging.getLogger(__name__)

__all__ = [
    "MarkedGraph",
    "EMPTY_GRAPH",
    "VERTEX",
    "MARKED_VERTEX",
    "intersection_graph",
    "induced_subgraph",
    "disjoint_union",
    "isolated_vertices",
    "multiply_graph_combinations",
    "graph_coproduct",
    "graph_marking_expansion",
    "complement_edge",
    "tilde",
    "lando_4t_combination",
    "extended_graph_relations",
    "graph_canonical_form",
    "to_networkx",
]

Edge = Tuple[int, int]


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class MarkedGraph:
    """A simple graph on vertices ``0..n-1`` with a set of marked vertices."""

    n: int
    edges: FrozenSet[Edge] = field(default_factory=frozenset)
    marks: FrozenSet[int] = field(default_factory=frozenset)

    def __post_init__(self):
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise PreconditionError(f"edge {(u, v)} is not a pair of distinct vertices of 0..{self.n - 1}")
        if any(not 0 <= m < self.n for m in self.marks):
            raise PreconditionError(f"marks {sorted(self.marks)} are not vertices of 0..{self.n - 1}")

    @classmethod
    def build(cls, n: int, edges: Iterable[Tuple[int, int]] = (), marks: Iterable[int] = ()) -> "MarkedGraph":
        """Build a graph from unordered edge pairs.

        :param n: vertex count
        :param edges: vertex pairs in any order
        :param marks: marked vertices
        :returns: the graph
        :raises PreconditionError: on self-loops or out-of-range vertices
        """
        normalized = set()
        for u, v in edges:
            if u == v:
                raise PreconditionError(f"self-loop at vertex {u}")
            normalized.add(_edge(u, v))
        return cls(n, frozenset(normalized), frozenset(marks))

    @property
    def vertices(self) -> range:
        """Get the vertex range."""
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        """Check whether ``u`` and ``v`` are adjacent."""
        return _edge(u, v) in self.edges

    def neighbors(self, v: int) -> Set[int]:
        """Get the neighbours of a vertex."""
        return {b if a == v else a for a, b in self.edges if v in (a, b)}

    def is_marked(self) -> bool:
        """Check whether any vertex is marked."""
        return bool(self.marks)

    def canonical(self) -> "MarkedGraph":
        """Get the canonical representative of the isomorphism class."""
        return graph_canonical_form(self)

    def sort_key(self):
        """Get a deterministic ordering key."""
        return (self.n, tuple(sorted(self.edges)), tuple(sorted(self.marks)))

    def to_dict(self) -> Dict[str, object]:
        """Get a JSON-ready edge-list description."""
        return {
            "vertices": self.n,
            "edges": [list(edge) for edge in sorted(self.edges)],
            "marks": sorted(self.marks),
        }

    def __str__(self) -> str:
        edges = " ".join(f"{u}-{v}" for u, v in sorted(self.edges))
        marks = ",".join(map(str, sorted(self.marks)))
        return f"G(n={self.n}; {edges or 'no edges'}; marks={marks or 'none'})"


EMPTY_GRAPH = MarkedGraph(0)
VERTEX = MarkedGraph(1)
MARKED_VERTEX = MarkedGraph(1, frozenset(), frozenset({0}))


def intersection_graph(diagram: MarkedChordDiagram) -> MarkedGraph:
    """Build the intersection graph of a diagram.

    Chord ``i`` becomes vertex ``i - 1``; two vertices are adjacent when the endpoints of their chords
    alternate around the circle. Marked chords give marked vertices.

    :param diagram: a diagram
    :returns: the marked intersection graph
    """
    ends = diagram.endpoints
    edges = set()
    for u, v in combinations(diagram.chords, 2):
        p1, q1 = ends[u]
        p2, q2 = ends[v]
        if (p1 < p2 < q1 < q2) or (p2 < p1 < q2 < q1):
            edges.add((u - 1, v - 1))
    return MarkedGraph(diagram.degree, frozenset(edges), frozenset(m - 1 for m in diagram.marks))


def induced_subgraph(graph: MarkedGraph, vertices: Iterable[int]) -> MarkedGraph:
    """Get the subgraph induced by a vertex subset.

    :param graph: a graph
    :param vertices: the vertex subset J; kept vertices are renumbered in increasing order
    :returns: ``G_J`` with the marks of J
    :raises PreconditionError: if a vertex is out of range
    """
    kept = sorted(set(vertices))
    if any(not 0 <= v < graph.n for v in kept):
        raise PreconditionError(f"vertices {kept} are not all in 0..{graph.n - 1}")
    index = {v: i for i, v in enumerate(kept)}
    edges = frozenset((index[u], index[v]) for u, v in graph.edges if u in index and v in index)
    marks = frozenset(index[m] for m in graph.marks if m in index)
    return MarkedGraph(len(kept), edges, marks)


def disjoint_union(first: MarkedGraph, second: MarkedGraph) -> MarkedGraph:
    """Multiply two graphs by disjoint union.

    :param first: vertices keep their numbers
    :param second: vertices are shifted by ``first.n``
    :returns: the disjoint union
    """
    shift = first.n
    return MarkedGraph(
        first.n + second.n,
        first.edges | frozenset((u + shift, v + shift) for u, v in second.edges),
        first.marks | frozenset(m + shift for m in second.marks),
    )


def isolated_vertices(graph: MarkedGraph) -> List[int]:
    """Get the vertices without neighbours."""
    touched = {v for edge in graph.edges for v in edge}
    return [v for v in graph.vertices if v not in touched]


def _union_terms(left, right):
    if isinstance(left, tuple):
        return tuple(disjoint_union(x, y) for x, y in zip(left, right))
    return disjoint_union(left, right)


def multiply_graph_combinations(left: FormalCombination, right: FormalCombination) -> FormalCombination:
    """Multiply two combinations of graphs (or of tensor pairs, componentwise) by disjoint union."""
    return left.product(right, _union_terms)


def graph_coproduct(graph: MarkedGraph) -> FormalCombination:
    """Compute Lando's coproduct.

    :param graph: a graph on n vertices
    :returns: the sum over vertex subsets J of ``G_J (x) G_{V \\ J}``; coefficients total 2^n
    """
    everything = set(graph.vertices)
    return FormalCombination(
        ((induced_subgraph(graph, part), induced_subgraph(graph, everything - part)), 1)
        for part in subsets(graph.vertices)
    )


def graph_marking_expansion(graph: MarkedGraph) -> FormalCombination:
    """Expand an unmarked graph as the signed sum over all vertex markings.

    :param graph: an unmarked graph
    :returns: the sum over vertex subsets J of ``(-1)^|J| G^J``
    :raises PreconditionError: if the graph has marked vertices
    """
    if graph.is_marked():
        raise PreconditionError(f"marking expansion needs an unmarked graph, got {graph}")
    return FormalCombination(
        (MarkedGraph(graph.n, graph.edges, part), (-1) ** len(part)) for part in subsets(graph.vertices)
    )


def _check_pair(graph: MarkedGraph, a: int, b: int) -> None:
    if a == b:
        raise PreconditionError(f"the two vertices must differ, got {a} twice")
    if not (0 <= a < graph.n and 0 <= b < graph.n):
        raise PreconditionError(f"vertices {a}, {b} are not in 0..{graph.n - 1}")


def complement_edge(graph: MarkedGraph, a: int, b: int) -> MarkedGraph:
    """Add or remove the edge AB (``G'_AB``)."""
    _check_pair(graph, a, b)
    return MarkedGraph(graph.n, graph.edges ^ {_edge(a, b)}, graph.marks)


def tilde(graph: MarkedGraph, a: int, b: int) -> MarkedGraph:
    """Complement AC for every C other than A adjacent to B (``G~_AB``); AB itself is kept."""
    _check_pair(graph, a, b)
    toggled = {_edge(a, c) for c in graph.neighbors(b) if c != a}
    return MarkedGraph(graph.n, graph.edges ^ toggled, graph.marks)


def lando_4t_combination(graph: MarkedGraph, a: int, b: int) -> FormalCombination:
    """Build Lando's four-term graph relation.

    :param graph: a graph
    :param a: vertex A
    :param b: vertex B
    :returns: ``G - G'_AB - G~_AB + G~'_AB``
    :raises PreconditionError: if ``a == b``
    """
    swapped = complement_edge(graph, a, b)
    slid = tilde(graph, a, b)
    return FormalCombination(
        [(graph, 1), (swapped, -1), (slid, -1), (complement_edge(slid, a, b), 1)]
    )


def _with_pair_marks(graph: MarkedGraph, a: int, b: int, a_marked: bool, b_marked: bool) -> MarkedGraph:
    marks = set(graph.marks) - {a, b}
    marks.update(v for v, flag in ((a, a_marked), (b, b_marked)) if flag)
    return MarkedGraph(graph.n, graph.edges, frozenset(marks))


def extended_graph_relations(graph: MarkedGraph, a: int, b: int) -> List[FormalCombination]:
    """Build the eight two-term relations on marked graphs for the vertex pair (A, B).

    Marks on vertices other than A and B are carried unchanged.

    :param graph: a (possibly marked) graph
    :param a: vertex A
    :param b: vertex B
    :returns: eight two-term combinations, in the order of the relation list
    """
    _check_pair(graph, a, b)
    g = graph
    g_prime = complement_edge(graph, a, b)
    g_tilde = tilde(graph, a, b)
    g_tilde_prime = complement_edge(g_tilde, a, b)

    def pair(left: MarkedGraph, left_marks, right: MarkedGraph, right_marks) -> FormalCombination:
        return FormalCombination(
            [
                (_with_pair_marks(left, a, b, *left_marks), 1),
                (_with_pair_marks(right, a, b, *right_marks), -1),
            ]
        )

    plain, a_star, b_star, both = (False, False), (True, False), (False, True), (True, True)
    return [
        pair(g, plain, g_tilde, plain),
        pair(g_prime, plain, g_tilde_prime, plain),
        pair(g, a_star, g_tilde, a_star),
        pair(g_prime, a_star, g_tilde_prime, a_star),
        pair(g, b_star, g_tilde_prime, both),
        pair(g_prime, b_star, g_tilde, both),
        pair(g_tilde, b_star, g_prime, both),
        pair(g_tilde_prime, b_star, g, both),
    ]


def to_networkx(graph: MarkedGraph) -> nx.Graph:
    """Export a marked graph to NetworkX.

    :param graph: a graph
    :returns: a ``networkx.Graph`` with a boolean ``marked`` node attribute
    """
    g = nx.Graph()
    for v in graph.vertices:
        g.add_node(v, marked=v in graph.marks, label="m" if v in graph.marks else "u")
    g.add_edges_from(graph.edges)
    return g


def _colour_classes(graph: MarkedGraph) -> List[List[int]]:
    """Partition vertices into isomorphism-invariant colour classes, ordered by colour."""
    g = to_networkx(graph)
    hashes = nx.weisfeiler_lehman_subgraph_hashes(g, node_attr="label", iterations=max(graph.n, 1))
    colour = {
        v: (v in graph.marks, g.degree[v], tuple(hashes.get(v, ()))) for v in graph.vertices
    }
    classes: Dict[tuple, List[int]] = {}
    for v in graph.vertices:
        classes.setdefault(colour[v], []).append(v)
    return [classes[key] for key in sorted(classes)]


@lru_cache(maxsize=1 << 14)
def graph_canonical_form(graph: MarkedGraph) -> MarkedGraph:
    """Relabel a graph canonically.

    Vertices are ordered by colour class (mark, degree, Weisfeiler-Lehman hashes); within classes every
    permutation is tried and the smallest upper-triangle adjacency bit string wins. Exact, and cheap
    up to about eight vertices.

    :param graph: a marked graph
    :returns: an isomorphic graph; isomorphic inputs give identical outputs
    """
    if graph.n == 0:
        return graph
    classes = _colour_classes(graph)
    pairs = list(combinations(range(graph.n), 2))
    best_key, best_order = None, None
    for choice in product(*(permutations(members) for members in classes)):
        order = [v for block in choice for v in block]
        key = tuple(_edge(order[i], order[j]) in graph.edges for i, j in pairs)
        if best_key is None or key < best_key:
            best_key, best_order = key, order
    index = {v: i for i, v in enumerate(best_order)}
    return MarkedGraph(
        graph.n,
        frozenset(_edge(index[u], index[v]) for u, v in graph.edges),
        frozenset(index[m] for m in graph.marks),
    )
