# coding: utf-8

"""Exhaustive and randomized consistency suites run by ``pyChordweights selftest``."""

import logging
import random
from dataclasses import asdict, dataclass
from typing import Callable, Dict, Iterable, List, Optional

from tqdm import tqdm

from pyChordweights.chord.diagram import MarkedChordDiagram, enumerate_diagrams, random_diagram
from pyChordweights.constants import (
    FOUR_TERM,
    HOMFLY,
    KAUFFMAN,
    MULTIPLICATIVITY_MAX_VERTICES,
    MULTIPLICATIVITY_PAIRS,
    ONE_TERM,
    RANDOM_SEED,
    SLIDE_SEQUENCE_LENGTH,
    SLIDE_SEQUENCES,
)
from pyChordweights.gf2 import adjacency_matrix, is_alternating
from pyChordweights.graph.intersection import MarkedGraph, disjoint_union, intersection_graph
from pyChordweights.relations.checks import check_vanishing
from pyChordweights.relations.moves import adjacent_positions, inverse_slide, random_slide_walk, slide
from pyChordweights.relations.span import caravan_reduction_check, pullback_probe
from pyChordweights.surgery import boundary_components
from pyChordweights.weights import systems
from pyChordweights.weights.polynomial import BivariatePolynomial

logger = logging.getLogger(__name__)

__all__ = [
    "CriterionResult",
    "CRITERIA",
    "run_acceptance",
]

FOUR_TERM_FUNCTIONALS = (
    "conway",
    "homfly",
    "kauffman",
    "homfly_deframed",
    "kauffman_deframed",
    "rank_deframed",
    "s_deframed",
    "t_deframed",
)
ONE_TERM_FUNCTIONALS = (
    "conway",
    "homfly_deframed",
    "kauffman_deframed",
    "rank_deframed",
    "s_deframed",
    "t_deframed",
)


@dataclass
class CriterionResult:
    """Outcome of one acceptance criterion."""

    criterion: int
    name: str
    total: int = 0
    failures: int = 0

    @property
    def passed(self) -> bool:
        """Check whether no case failed."""
        return self.failures == 0

    def record(self, ok: bool, case: object = None) -> None:
        """Count one case."""
        self.total += 1
        if not ok:
            self.failures += 1
            logger.warning("criterion %d (%s) fails on %s", self.criterion, self.name, case)

    def to_dict(self) -> Dict[str, object]:
        """Get a JSON-ready view."""
        return {**asdict(self), "passed": self.passed}


def _diagrams(max_degree: int, marked: bool = False, progress: bool = False) -> Iterable[MarkedChordDiagram]:
    for n in range(max_degree + 1):
        yield from tqdm(enumerate_diagrams(n, marked), desc=f"degree {n}", disable=not progress, leave=False)


def _rank(diagram: MarkedChordDiagram) -> int:
    return systems.graph_rank(intersection_graph(diagram))


def rank_component_identity(max_degree: int = 6, progress: bool = False) -> CriterionResult:
    """Check ``c = k - rank + 1`` on unmarked diagrams."""
    result = CriterionResult(1, "rank-component identity")
    for d in _diagrams(max_degree, progress=progress):
        result.record(boundary_components(d) == d.degree - _rank(d) + 1, d)
    return result


def marked_rank_identity(max_degree: int = 4, progress: bool = False) -> CriterionResult:
    """Check ``c = k - rank + 1`` with the marked adjacency form."""
    result = CriterionResult(2, "marked rank identity")
    for d in _diagrams(max_degree, marked=True, progress=progress):
        result.record(boundary_components(d) == d.degree - _rank(d) + 1, d)
    return result


def conway_equivalence(max_degree: int = 6, progress: bool = False) -> CriterionResult:
    """Check the determinant route of ``C`` against surgery."""
    result = CriterionResult(3, "conway equivalence")
    for d in _diagrams(max_degree, progress=progress):
        result.record(systems.conway(d) == systems.conway_surgery(d), d)
    return result


def homfly_equivalence(max_degree: int = 6, progress: bool = False) -> CriterionResult:
    """Check the rank route of ``H`` against surgery."""
    result = CriterionResult(4, "homfly equivalence")
    for d in _diagrams(max_degree, progress=progress):
        result.record(systems.homfly(d) == systems.homfly_surgery(d), d)
    return result


def kauffman_equivalence(max_degree: int = 5, progress: bool = False) -> CriterionResult:
    """Check the closed form of ``K`` against the marking expansion through surgery."""
    result = CriterionResult(5, "kauffman equivalence")
    for d in _diagrams(max_degree, progress=progress):
        result.record(systems.kauffman(d) == systems.kauffman_surgery(d), d)
    return result


def relation_vanishing(max_degree: int = 5, progress: bool = False) -> CriterionResult:
    """Check 4-term vanishing of every weight system and 1-term vanishing of the deframed ones."""
    result = CriterionResult(6, "relation vanishing")
    for n in range(max_degree + 1):
        for kind, names in ((FOUR_TERM, FOUR_TERM_FUNCTIONALS), (ONE_TERM, ONE_TERM_FUNCTIONALS)):
            for name in names:
                report = check_vanishing(name, n, kind, workers=1, progress=progress)
                result.total += report["total"]
                result.failures += report["failures"]
    return result


def _slide_invariants(d: MarkedChordDiagram) -> tuple:
    graph = intersection_graph(d)
    return (
        systems.graph_rank(graph),
        systems.graph_det(graph),
        is_alternating(adjacency_matrix(graph)),
        boundary_components(d),
        systems.kauffman_marked(d),
    )


def two_term_invariance(
    max_degree: int = 4,
    sequences: int = SLIDE_SEQUENCES,
    length: int = SLIDE_SEQUENCE_LENGTH,
    random_max_degree: int = 6,
    seed: int = RANDOM_SEED,
    progress: bool = False,
) -> CriterionResult:
    """Check that slides preserve rank, det, alternating type, components and ``K^m``.

    The unmarked Kauffman weight satisfies 4-term relations only and is not part of the check.

    Runs every slide and inverse slide on every marked diagram up to ``max_degree``, then random slide
    sequences on random marked diagrams up to ``random_max_degree``.
    """
    result = CriterionResult(7, "2-term invariance")
    for d in _diagrams(max_degree, marked=True, progress=progress):
        expected = _slide_invariants(d)
        size = len(d.word)
        for p in adjacent_positions(d):
            q = (p + 1) % size
            moved = slide(d, p, q)
            result.record(_slide_invariants(moved) == expected, (d, p))
            result.record(_slide_invariants(inverse_slide(d, q, p)) == expected, (d, q))

    rng = random.Random(seed)
    for _ in tqdm(range(sequences), desc="slide walks", disable=not progress, leave=False):
        start = random_diagram(rng.randint(1, random_max_degree), rng, marked=rng.random() < 0.5)
        expected = _slide_invariants(start)
        walk = random_slide_walk(start, length, rng)
        result.record(all(_slide_invariants(d) == expected for d in walk[1:]), start)
    return result


def caravan_reduction(max_degree: int = 4, progress: bool = False) -> CriterionResult:
    """Check that every marked diagram reduces to its caravan in the extended 2-term quotient."""
    result = CriterionResult(8, "caravan reduction")
    for n in range(max_degree + 1):
        report = caravan_reduction_check(n, progress)
        result.total += report["total"]
        result.failures += report["failures"]
    return result


def deframing_consistency(max_degree: int = 5, progress: bool = False) -> CriterionResult:
    """Check every closed deframed form against the generic projection."""
    result = CriterionResult(9, "deframing consistency")
    for d in _diagrams(max_degree, progress=progress):
        g = intersection_graph(d)
        result.record(systems.homfly_deframed(d) == systems.deframe(HOMFLY, d), d)
        result.record(systems.kauffman_deframed(d) == systems.deframe(KAUFFMAN, d), d)
        result.record(systems.rank_poly_deframed(g) == systems.graph_deframe(systems.rank_poly, g), g)
        result.record(systems.s_poly_deframed(g) == systems.graph_deframe(systems.s_poly, g), g)
        result.record(systems.t_poly_deframed(g) == systems.graph_deframe(systems.t_poly, g), g)
        gap = systems.t_poly_deframed_displayed(g) - systems.t_poly_deframed(g)
        result.record(gap == (1 if g.n else 0), g)
    return result


def _random_graph(n: int, rng: random.Random) -> MarkedGraph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
    return MarkedGraph.build(n, edges)


def multiplicativity(
    pairs: int = MULTIPLICATIVITY_PAIRS,
    max_vertices: int = MULTIPLICATIVITY_MAX_VERTICES,
    seed: int = RANDOM_SEED,
    progress: bool = False,
) -> CriterionResult:
    """Check ``S(G1 + G2) = S(G1) S(G2)`` on random pairs whose union has at most ``max_vertices``."""
    result = CriterionResult(10, "multiplicativity")
    rng = random.Random(seed)
    for _ in tqdm(range(pairs), desc="graph pairs", disable=not progress, leave=False):
        n1 = rng.randint(0, max_vertices)
        n2 = rng.randint(0, max_vertices - n1)
        g1, g2 = _random_graph(n1, rng), _random_graph(n2, rng)
        result.record(systems.s_poly(disjoint_union(g1, g2)) == systems.s_poly(g1) * systems.s_poly(g2), (g1, g2))
    return result


def nullity_identities(max_degree: int = 5, progress: bool = False) -> CriterionResult:
    """Check ``H(D) = a^k N(Gamma(D))(b)`` and ``K(D) = a^k U(Gamma(D))(b)``."""
    result = CriterionResult(11, "nullity identities")
    for d in _diagrams(max_degree, progress=progress):
        g = intersection_graph(d)
        a_power = BivariatePolynomial.monomial(d.degree, 0)
        result.record(systems.homfly(d) == a_power * systems.nullity_poly(g), d)
        result.record(systems.kauffman(d) == a_power * systems.nullity_poly(g, True), d)
    return result


def pullback(max_degree: int = 4, progress: bool = False) -> CriterionResult:
    """Check that marking expansions of 4-term relations lie in the extended 2-term span."""
    result = CriterionResult(12, "4-term pullback")
    for n in range(max_degree + 1):
        report = pullback_probe(n, progress)
        result.total += report["total"]
        result.failures += report["failures"]
    return result


CRITERIA: Dict[int, Callable[..., CriterionResult]] = {
    1: rank_component_identity,
    2: marked_rank_identity,
    3: conway_equivalence,
    4: homfly_equivalence,
    5: kauffman_equivalence,
    6: relation_vanishing,
    7: two_term_invariance,
    8: caravan_reduction,
    9: deframing_consistency,
    10: multiplicativity,
    11: nullity_identities,
    12: pullback,
}


def run_acceptance(criteria: Optional[Iterable[int]] = None, progress: bool = False) -> List[CriterionResult]:
    """Run acceptance criteria in order.

    :param criteria: criterion numbers to run; all when omitted
    :param progress: show progress bars
    :returns: one result per criterion
    """
    selected = sorted(CRITERIA) if criteria is None else sorted(set(criteria))
    results = []
    for number in selected:
        logger.info("running criterion %d", number)
        results.append(CRITERIA[number](progress=progress))
    return results
