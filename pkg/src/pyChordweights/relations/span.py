# coding: utf-8

"""Exact quotient dimensions of diagram spaces modulo relation spans.

Relations are reduced into a sparse row-reduced echelon form over the rationals; a combination lies in
the span exactly when it reduces to zero.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from tqdm import tqdm

from pyChordweights.chord.combination import FormalCombination
from pyChordweights.chord.diagram import (
    MarkedChordDiagram,
    caravan_diagram,
    connect_sum,
    enumerate_diagrams,
    marking_expansion,
)
from pyChordweights.constants import (
    MAX_MARKED_SPAN_DEGREE,
    MAX_UNMARKED_SPAN_DEGREE,
    SPACE_A,
    SPACE_B,
    SPACE_B_MARKED,
    SPACE_RELATIONS,
)
from pyChordweights.relations.checks import caravan_normal_form
from pyChordweights.relations.moves import adjacent_positions, generate_relations, inverse_slide, slide
from pyChordweights.utils import PreconditionError, check_degree_cap
from pyChordweights.weights.polynomial import BivariatePolynomial
from pyChordweights.weights.systems import kauffman_marked

logger = logging.getLogger(__name__)

__all__ = [
    "RationalRowReducer",
    "SpanAnalysis",
    "span_analysis",
    "in_relation_span",
    "pullback_probe",
    "product_probe",
    "caravan_reduction_check",
]

SparseRow = Dict[int, Fraction]


class RationalRowReducer:
    """Incremental sparse reduced row echelon form over ``Fraction``.

    Every stored row has a leading 1 in its pivot column and zeros in every other pivot column.
    """

    def __init__(self):
        self.pivots: Dict[int, SparseRow] = {}

    @property
    def rank(self) -> int:
        """Get the rank of the rows added so far."""
        return len(self.pivots)

    def reduce(self, row: SparseRow) -> SparseRow:
        """Reduce a row against the stored pivots.

        :param row: a sparse row
        :returns: the residual, with zeros in every pivot column
        """
        residual = {col: Fraction(value) for col, value in row.items() if value}
        for col in [c for c in residual if c in self.pivots]:
            factor = residual.get(col, 0)
            if not factor:
                continue
            for other, value in self.pivots[col].items():
                updated = residual.get(other, 0) - factor * value
                if updated:
                    residual[other] = updated
                else:
                    residual.pop(other, None)
        return residual

    def add(self, row: SparseRow) -> bool:
        """Add a row to the span.

        :param row: a sparse row
        :returns: True if the rank grew
        """
        residual = self.reduce(row)
        if not residual:
            return False
        pivot = min(residual)
        scale = residual[pivot]
        residual = {col: value / scale for col, value in residual.items()}
        for stored in self.pivots.values():
            factor = stored.get(pivot, 0)
            if not factor:
                continue
            for col, value in residual.items():
                updated = stored.get(col, 0) - factor * value
                if updated:
                    stored[col] = updated
                else:
                    stored.pop(col, None)
        self.pivots[pivot] = residual
        return True


def _fraction_text(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


@dataclass
class SpanAnalysis:
    """The relation span in one degree of one space.

    :param space: ``A`` (modulo 4T), ``B`` (modulo 2T) or ``B_marked`` (marked diagrams modulo extended 2T)
    :param degree: the degree n
    :param basis: the canonical diagrams of degree n, indexing the columns
    :param relations: number of relations reduced
    """

    space: str
    degree: int
    basis: Tuple[MarkedChordDiagram, ...]
    relations: int = 0
    reducer: RationalRowReducer = field(default_factory=RationalRowReducer)

    def __post_init__(self):
        self.index = {diagram: i for i, diagram in enumerate(self.basis)}

    @property
    def rank(self) -> int:
        """Get the rank of the relation span."""
        return self.reducer.rank

    @property
    def dimension(self) -> int:
        """Get the dimension of the quotient space."""
        return len(self.basis) - self.rank

    @property
    def quotient_basis(self) -> List[MarkedChordDiagram]:
        """Get the diagrams whose classes form a basis of the quotient (the non-pivot columns)."""
        return [d for i, d in enumerate(self.basis) if i not in self.reducer.pivots]

    def vector(self, combination: FormalCombination) -> SparseRow:
        """Write a combination of degree-n diagrams as a sparse row.

        :raises PreconditionError: if a term is not a basis diagram of this space
        """
        row: SparseRow = {}
        for diagram, coefficient in combination.items():
            if diagram not in self.index:
                raise PreconditionError(f"{diagram} is not a basis diagram of {self.space} in degree {self.degree}")
            row[self.index[diagram]] = Fraction(coefficient)
        return row

    def contains(self, combination: FormalCombination) -> bool:
        """Check whether a combination lies in the relation span."""
        return not self.reducer.reduce(self.vector(combination))

    def class_of(self, diagram: MarkedChordDiagram) -> Dict[str, Fraction]:
        """Get the coordinates of a diagram's class on the quotient basis.

        :param diagram: a diagram of degree n
        :returns: map from quotient basis diagram (as text) to coefficient
        """
        residual = self.reducer.reduce(self.vector(FormalCombination.single(diagram)))
        return {str(self.basis[col]): value for col, value in sorted(residual.items())}

    def to_dict(self, with_classes: bool = False) -> Dict[str, object]:
        """Get a JSON-ready report."""
        report: Dict[str, object] = {
            "space": self.space,
            "degree": self.degree,
            "diagrams": len(self.basis),
            "relations": self.relations,
            "rank": self.rank,
            "dimension": self.dimension,
            "quotient_basis": [str(d) for d in self.quotient_basis],
        }
        if with_classes:
            report["class_of"] = {
                str(d): {k: _fraction_text(v) for k, v in self.class_of(d).items()} for d in self.basis
            }
        return report


def _span_cap(space: str) -> int:
    if space not in SPACE_RELATIONS:
        raise PreconditionError(f"unknown space {space!r}; choose from {sorted(SPACE_RELATIONS)}")
    return MAX_MARKED_SPAN_DEGREE if space == SPACE_B_MARKED else MAX_UNMARKED_SPAN_DEGREE


def span_analysis(n: int, space: str = SPACE_B, progress: bool = False) -> SpanAnalysis:
    """Compute the exact relation span and quotient dimension in degree n.

    :param n: the degree
    :param space: ``A``, ``B`` or ``B_marked``
    :param progress: show a progress bar
    :returns: the analysis
    :raises DegreeCapError: above the span cap (5 unmarked, 4 marked)
    """
    check_degree_cap(n, _span_cap(space), f"span analysis of {space}")
    key = (n, space)
    if key not in _SPANS:
        _SPANS[key] = _build_span(n, space, progress)
    return _SPANS[key]


# analyses by (degree, space); the progress flag is not part of the key
_SPANS: Dict[Tuple[int, str], SpanAnalysis] = {}


def _build_span(n: int, space: str, progress: bool) -> SpanAnalysis:
    basis = tuple(enumerate_diagrams(n, marked=space == SPACE_B_MARKED))
    analysis = SpanAnalysis(space, n, basis)
    kind = SPACE_RELATIONS[space]
    for relation in tqdm(generate_relations(n, kind), desc=f"span {space} n={n}", disable=not progress, leave=False):
        analysis.relations += 1
        analysis.reducer.add(analysis.vector(relation))
    logger.info(
        "%s in degree %d: %d diagrams, %d relations, rank %d, dimension %d",
        space, n, len(basis), analysis.relations, analysis.rank, analysis.dimension,
    )
    return analysis


def _degree_of(combination: FormalCombination) -> Optional[int]:
    degrees = {diagram.degree for diagram in combination.keys()}
    if len(degrees) > 1:
        raise PreconditionError(f"combination mixes degrees {sorted(degrees)}")
    return degrees.pop() if degrees else None


def in_relation_span(combination: FormalCombination, n: Optional[int] = None, space: str = SPACE_B) -> bool:
    """Check exact membership of a combination in the relation span.

    :param combination: a combination of diagrams of one degree
    :param n: the degree, taken from the terms when omitted
    :param space: ``A``, ``B`` or ``B_marked``
    :returns: True if the combination is a rational combination of relations
    """
    if combination.is_zero():
        return True
    degree = _degree_of(combination) if n is None else n
    return span_analysis(degree, space).contains(combination)


def pullback_probe(n: int, progress: bool = False) -> Dict[str, object]:
    """Check that the marking expansion of every 4-term relation lies in the extended 2-term span.

    :param n: the degree, at most the marked span cap
    :returns: a report with ``total`` and ``failures``
    """
    check_degree_cap(n, MAX_MARKED_SPAN_DEGREE, "pullback probe")
    analysis = span_analysis(n, SPACE_B_MARKED, progress)
    total = failures = 0
    for relation in tqdm(generate_relations(n, SPACE_RELATIONS[SPACE_A]), disable=not progress, leave=False):
        total += 1
        if not analysis.contains(relation.map_terms(marking_expansion)):
            failures += 1
            logger.warning("marking expansion of %r is not in the extended 2-term span", relation)
    return {"probe": "pullback", "degree": n, "total": total, "failures": failures}


def product_probe(n1: int, n2: int, progress: bool = False) -> Dict[str, object]:
    """Check that slides are compatible with connect sum.

    For every unmarked D1 of degree n1, every slide D1' of it and every D2 of degree n2, the difference
    ``D1 . D2 - D1' . D2`` must lie in the 2-term span of degree ``n1 + n2``.

    :returns: a report with ``total`` and ``failures``
    """
    analysis = span_analysis(n1 + n2, SPACE_B, progress)
    total = failures = 0
    for first in enumerate_diagrams(n1):
        size = len(first.word)
        moved = []
        for p in adjacent_positions(first):
            q = (p + 1) % size
            moved.extend([slide(first, p, q), inverse_slide(first, q, p)])
        for other in moved:
            for second in enumerate_diagrams(n2):
                total += 1
                difference = FormalCombination([(connect_sum(first, second), 1), (connect_sum(other, second), -1)])
                if not analysis.contains(difference):
                    failures += 1
                    logger.warning("%r is not in the 2-term span", difference)
    return {"probe": "product", "degrees": [n1, n2], "total": total, "failures": failures}


def caravan_reduction_check(n: int, progress: bool = False) -> Dict[str, object]:
    """Check that every marked diagram of degree n is equivalent to the caravan of its adjacency form.

    Also checks that ``K^m`` of the caravan ``(n1, n2, n3)`` is ``a^k b^n2``.

    :param n: the degree, at most the marked span cap
    :returns: a report with ``total`` and ``failures``
    """
    analysis = span_analysis(n, SPACE_B_MARKED, progress)
    total = failures = 0
    for diagram in analysis.basis:
        total += 1
        caravan = caravan_normal_form(diagram)
        realized = caravan_diagram(*caravan.as_tuple())
        difference = FormalCombination([(diagram, 1), (realized, -1)])
        expected = BivariatePolynomial.monomial(caravan.degree, caravan.unmarked_ones)
        if not analysis.contains(difference) or kauffman_marked(realized) != expected:
            failures += 1
            logger.warning("%s does not reduce to the caravan %s", diagram, caravan.as_tuple())
    return {"probe": "caravan", "degree": n, "total": total, "failures": failures}
