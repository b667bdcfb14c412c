# coding: utf-8

"""Python module for the Conway, HOMFLYPT and Kauffman weight systems and their graph counterparts.

Every diagram-level weight system has a closed form through the intersection graph and, where one
exists, an independent route through band surgery. The ``*_deframed`` values are the canonical
projections onto functionals that satisfy the 1-term relation.
"""

import logging
import warnings
from functools import lru_cache
from typing import Callable, Dict, Optional, Union

from pyChordweights.chord.diagram import (
    THETA,
    MarkedChordDiagram,
    connect_sum,
    keep_chords,
    marking_expansion,
)
from pyChordweights.constants import (
    CONWAY,
    HOMFLY,
    KAUFFMAN,
    NULLITY,
    NULLITY_MARKED,
    RANK,
    S_POLY,
    SYMBOL_X,
    T_POLY,
)
from pyChordweights.gf2 import adjacency_matrix, gf2_det, gf2_nullity, gf2_rank
from pyChordweights.graph.intersection import (
    VERTEX,
    MarkedGraph,
    disjoint_union,
    graph_marking_expansion,
    induced_subgraph,
    intersection_graph,
)
from pyChordweights.surgery import boundary_components
from pyChordweights.utils import PreconditionError, UnknownFunctionalError, subsets
from pyChordweights.weights.polynomial import BivariatePolynomial

logger = logging.getLogger(__name__)

__all__ = [
    # graph weight systems
    "graph_rank",
    "graph_det",
    "graph_nullity",
    "rank_poly",
    "rank_poly_deframed",
    "s_poly",
    "s_poly_deframed",
    "t_poly",
    "t_poly_deframed",
    "t_poly_deframed_displayed",
    "nullity_poly",
    "nullity_poly_deframed",
    "graph_deframe",
    # diagram weight systems
    "conway",
    "conway_surgery",
    "homfly",
    "homfly_surgery",
    "homfly_deframed",
    "kauffman",
    "kauffman_marked",
    "kauffman_surgery",
    "kauffman_deframed",
    "deframe",
    "invariants_report",
]

Weight = Union[int, BivariatePolynomial]

X = BivariatePolynomial.monomial(0, 1)
ONE = BivariatePolynomial.constant(1)
ZERO = BivariatePolynomial.constant(0)


def _x_power(exponent: int) -> BivariatePolynomial:
    return BivariatePolynomial.monomial(0, exponent)


def _framing(k: int) -> BivariatePolynomial:
    """Get ``(ab)^k``."""
    return BivariatePolynomial.monomial(k, k)


def _require_unmarked(diagram: MarkedChordDiagram, what: str) -> None:
    if diagram.is_marked():
        raise PreconditionError(f"{what} is defined on unmarked diagrams, got {diagram}")


def _require_unmarked_graph(graph: MarkedGraph, what: str) -> None:
    if graph.is_marked():
        raise PreconditionError(f"{what} is defined on unmarked graphs, got {graph}")


def _check_exponents(value: BivariatePolynomial, what: str, diagram: MarkedChordDiagram) -> BivariatePolynomial:
    if value.has_negative_exponent():
        warnings.warn(f"{what}({diagram}) = {value} has a negative exponent", stacklevel=3)
    return value


def graph_rank(graph: MarkedGraph) -> int:
    """Get the rank over Z_2 of the (marked) adjacency matrix."""
    return gf2_rank(adjacency_matrix(graph))


def graph_det(graph: MarkedGraph) -> int:
    """Get the determinant over Z_2 of the (marked) adjacency matrix."""
    return gf2_det(adjacency_matrix(graph))


def graph_nullity(graph: MarkedGraph) -> int:
    """Get the nullity over Z_2 of the (marked) adjacency matrix."""
    return gf2_nullity(adjacency_matrix(graph))


def graph_deframe(weight: Callable[[MarkedGraph], Weight], graph: MarkedGraph) -> BivariatePolynomial:
    """Project a graph weight system onto one that vanishes on graphs with an isolated vertex.

    :param weight: a multiplicative graph functional
    :param graph: a graph on n vertices
    :returns: the sum over vertex subsets J of ``(-1)^(n-|J|) W(isolated^(n-|J|) + G_J)``
    """
    total = ZERO
    for part in subsets(graph.vertices):
        missing = graph.n - len(part)
        padded = induced_subgraph(graph, part)
        for _ in range(missing):
            padded = disjoint_union(VERTEX, padded)
        total = total + (-1) ** missing * weight(padded)
    return total


@lru_cache(maxsize=1 << 14)
def rank_poly(graph: MarkedGraph) -> BivariatePolynomial:
    """Compute ``R(G)(x) = x^rank(G)``."""
    return _x_power(graph_rank(graph))


@lru_cache(maxsize=1 << 14)
def rank_poly_deframed(graph: MarkedGraph) -> BivariatePolynomial:
    """Compute ``R^(G)(x)``, the sum over vertex subsets J of ``(-1)^(n-|J|) x^rank(G_J)``.

    :param graph: an unmarked graph
    :returns: the deframed rank polynomial; 1 for the empty graph
    """
    _require_unmarked_graph(graph, "rank_poly_deframed")
    total = ZERO
    for part in subsets(graph.vertices):
        total = total + (-1) ** (graph.n - len(part)) * _x_power(graph_rank(induced_subgraph(graph, part)))
    return total


@lru_cache(maxsize=1 << 14)
def s_poly(graph: MarkedGraph) -> BivariatePolynomial:
    """Compute ``S(G)(x)``, the sum over markings J of ``(-1)^|J| x^rank(G^J)``.

    :param graph: an unmarked graph
    :returns: the polynomial; multiplicative under disjoint union
    :raises PreconditionError: for a marked graph
    """
    _require_unmarked_graph(graph, "s_poly")
    return graph_marking_expansion(graph).evaluate(lambda marked: _x_power(graph_rank(marked)), ZERO)


@lru_cache(maxsize=1 << 14)
def t_poly(graph: MarkedGraph) -> BivariatePolynomial:
    """Compute ``T(G)(x)``, the sum over markings J of ``(-1)^|J| x^det(G^J)``.

    :param graph: an unmarked graph
    :returns: the polynomial; ``x`` for the empty graph
    :raises PreconditionError: for a marked graph
    """
    _require_unmarked_graph(graph, "t_poly")
    return graph_marking_expansion(graph).evaluate(lambda marked: _x_power(graph_det(marked)), ZERO)


@lru_cache(maxsize=1 << 14)
def s_poly_deframed(graph: MarkedGraph) -> BivariatePolynomial:
    """Compute ``S^(G)(x)``, the sum over vertex subsets J of ``(x - 1)^(n-|J|) S(G_J)``."""
    _require_unmarked_graph(graph, "s_poly_deframed")
    total = ZERO
    for part in subsets(graph.vertices):
        total = total + (X - 1) ** (graph.n - len(part)) * s_poly(induced_subgraph(graph, part))
    return total


@lru_cache(maxsize=1 << 14)
def t_poly_deframed_displayed(graph: MarkedGraph) -> BivariatePolynomial:
    """Compute the uncorrected sum over vertex subsets J of ``T(G_J)``.

    It exceeds the canonical projection :func:`t_poly_deframed` by exactly 1 on every non-empty graph.
    """
    _require_unmarked_graph(graph, "t_poly_deframed_displayed")
    total = ZERO
    for part in subsets(graph.vertices):
        total = total + t_poly(induced_subgraph(graph, part))
    return total


@lru_cache(maxsize=1 << 14)
def t_poly_deframed(graph: MarkedGraph) -> BivariatePolynomial:
    """Compute ``T^(G)(x)``, the canonical projection of ``T``.

    For n >= 1 this is ``(x - 1)`` plus the sum over non-empty vertex subsets J of ``T(G_J)``; the empty
    graph keeps ``T = x``.

    :param graph: an unmarked graph
    :returns: the deframed polynomial, equal to ``graph_deframe(t_poly, G)``
    """
    _require_unmarked_graph(graph, "t_poly_deframed")
    if graph.n == 0:
        return t_poly(graph)
    total = X - 1
    for part in subsets(graph.vertices):
        if part:
            total = total + t_poly(induced_subgraph(graph, part))
    return total


@lru_cache(maxsize=1 << 14)
def nullity_poly(graph: MarkedGraph, marked: bool = False) -> BivariatePolynomial:
    """Compute the nullity polynomials.

    :param graph: a graph; must be unmarked when ``marked`` is True
    :param marked: False for ``N(G) = x^nullity(G)``, True for ``U(G)``, the sum over markings J of
        ``(-1)^|J| x^nullity(G^J)``
    :returns: the polynomial
    """
    if not marked:
        return _x_power(graph_nullity(graph))
    _require_unmarked_graph(graph, "nullity_poly(marked=True)")
    return graph_marking_expansion(graph).evaluate(lambda g: _x_power(graph_nullity(g)), ZERO)


def nullity_poly_deframed(graph: MarkedGraph, marked: bool = False) -> BivariatePolynomial:
    """Compute the deframed nullity polynomials ``N^`` and ``U^`` by the canonical projection."""
    return graph_deframe(lambda g: nullity_poly(g, marked), graph)


@lru_cache(maxsize=1 << 14)
def conway(diagram: MarkedChordDiagram) -> int:
    """Compute ``C(D) = det(adj(Gamma(D)))`` over Z_2.

    :param diagram: an unmarked diagram
    :returns: 0 or 1
    :raises PreconditionError: for a marked diagram
    """
    _require_unmarked(diagram, "conway")
    return graph_det(intersection_graph(diagram))


def conway_surgery(diagram: MarkedChordDiagram) -> int:
    """Compute ``C(D)`` by surgery: 1 when a single circle remains, else 0."""
    _require_unmarked(diagram, "conway_surgery")
    return int(boundary_components(diagram) == 1)


@lru_cache(maxsize=1 << 14)
def homfly(diagram: MarkedChordDiagram) -> BivariatePolynomial:
    """Compute ``H(D) = a^k b^(k - rank(Gamma(D)))``.

    :param diagram: an unmarked diagram of degree k
    :returns: a monomial
    :raises PreconditionError: for a marked diagram
    """
    _require_unmarked(diagram, "homfly")
    k = diagram.degree
    return BivariatePolynomial.monomial(k, k - graph_rank(intersection_graph(diagram)))


def homfly_surgery(diagram: MarkedChordDiagram) -> BivariatePolynomial:
    """Compute ``H(D) = a^k b^(c - 1)`` from the surgery component count."""
    _require_unmarked(diagram, "homfly_surgery")
    return BivariatePolynomial.monomial(diagram.degree, boundary_components(diagram) - 1)


@lru_cache(maxsize=1 << 14)
def homfly_deframed(diagram: MarkedChordDiagram) -> BivariatePolynomial:
    """Compute ``H^(D) = (ab)^k R^(Gamma(D))(b^-1)``."""
    _require_unmarked(diagram, "homfly_deframed")
    value = _framing(diagram.degree) * rank_poly_deframed(intersection_graph(diagram)).at_inverse_b()
    return _check_exponents(value, "homfly_deframed", diagram)


@lru_cache(maxsize=1 << 14)
def kauffman(diagram: MarkedChordDiagram) -> BivariatePolynomial:
    """Compute ``K(D) = (ab)^k S(Gamma(D))(b^-1)``.

    :param diagram: an unmarked diagram of degree k
    :returns: the Kauffman weight
    :raises PreconditionError: for a marked diagram
    """
    _require_unmarked(diagram, "kauffman")
    value = _framing(diagram.degree) * s_poly(intersection_graph(diagram)).at_inverse_b()
    return _check_exponents(value, "kauffman", diagram)


def kauffman_marked(diagram: MarkedChordDiagram) -> BivariatePolynomial:
    """Compute ``K^m(D) = a^k b^(c - 1)`` on a marked diagram by surgery."""
    return BivariatePolynomial.monomial(diagram.degree, boundary_components(diagram) - 1)


def kauffman_surgery(diagram: MarkedChordDiagram) -> BivariatePolynomial:
    """Compute ``K(D)`` as ``K^m`` of the marking expansion (2^k surgeries)."""
    return marking_expansion(diagram).evaluate(kauffman_marked, ZERO)


@lru_cache(maxsize=1 << 14)
def kauffman_deframed(diagram: MarkedChordDiagram) -> BivariatePolynomial:
    """Compute ``K^(D) = (ab)^k S^(Gamma(D))(b^-1)``."""
    _require_unmarked(diagram, "kauffman_deframed")
    value = _framing(diagram.degree) * s_poly_deframed(intersection_graph(diagram)).at_inverse_b()
    return _check_exponents(value, "kauffman_deframed", diagram)


def _through_graph(func: Callable[[MarkedGraph], Weight]) -> Callable[[MarkedChordDiagram], Weight]:
    return lambda diagram: func(intersection_graph(diagram))


DEFRAMABLE: Dict[str, Callable[[MarkedChordDiagram], Weight]] = {
    CONWAY: conway,
    HOMFLY: homfly,
    KAUFFMAN: kauffman,
    RANK: _through_graph(rank_poly),
    S_POLY: _through_graph(s_poly),
    T_POLY: _through_graph(t_poly),
    NULLITY: _through_graph(lambda g: nullity_poly(g, False)),
    NULLITY_MARKED: _through_graph(lambda g: nullity_poly(g, True)),
}


def deframe(
    weight: Union[str, Callable[[MarkedChordDiagram], Weight]], diagram: MarkedChordDiagram
) -> BivariatePolynomial:
    """Apply the deframing projection to a weight system on one diagram.

    :param weight: a name from ``DEFRAMABLE`` or a diagram functional
    :param diagram: an unmarked diagram of degree n
    :returns: the sum over chord subsets J of ``(-1)^(n-|J|) W(Theta^(n-|J|) . D_J)``
    :raises UnknownFunctionalError: for an unknown name
    """
    if isinstance(weight, str):
        if weight not in DEFRAMABLE:
            raise UnknownFunctionalError(f"cannot deframe {weight!r}; choose from {sorted(DEFRAMABLE)}")
        weight = DEFRAMABLE[weight]
    total = ZERO
    for part in subsets(diagram.chords):
        missing = diagram.degree - len(part)
        padded = keep_chords(diagram, part)
        for _ in range(missing):
            padded = connect_sum(THETA, padded)
        total = total + (-1) ** missing * weight(padded)
    return total


def invariants_report(diagram: MarkedChordDiagram, debug: bool = False) -> Dict[str, Optional[object]]:
    """Collect the invariants of one diagram as a JSON-ready dict.

    Unmarked-only weight systems are ``None`` for a marked diagram, which reports ``kauffman_marked``
    instead.

    :param diagram: a diagram
    :param debug: add the corrected and uncorrected deframed ``T`` of the intersection graph
    :returns: the report, keys in emission order
    """
    graph = intersection_graph(diagram)
    report: Dict[str, Optional[object]] = {
        "diagram": str(diagram),
        "degree": diagram.degree,
        "rank": graph_rank(graph),
        "det": graph_det(graph),
        "nullity": graph_nullity(graph),
        "components": boundary_components(diagram),
    }
    if diagram.is_marked():
        report.update(dict.fromkeys(("conway", "homfly", "homfly_deframed", "kauffman", "kauffman_deframed")))
        report["kauffman_marked"] = str(kauffman_marked(diagram))
        return report

    report.update(
        {
            "conway": conway(diagram),
            "homfly": str(homfly(diagram)),
            "homfly_deframed": str(homfly_deframed(diagram)),
            "kauffman": str(kauffman(diagram)),
            "kauffman_deframed": str(kauffman_deframed(diagram)),
        }
    )
    if debug:
        report["t_deframed"] = t_poly_deframed(graph).format(SYMBOL_X)
        report["t_deframed_displayed"] = t_poly_deframed_displayed(graph).format(SYMBOL_X)
    return report
