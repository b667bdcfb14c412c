# coding: utf-8

"""Python module for slide moves and the 1-term, 2-term and 4-term relations on chord diagrams."""

import logging
import random
from typing import Iterator, List, Optional, Tuple

from pyChordweights.chord.combination import FormalCombination
from pyChordweights.chord.diagram import MarkedChordDiagram, enumerate_diagrams
from pyChordweights.constants import (
    EXTENDED_TWO_TERM,
    FOUR_TERM,
    MAX_MARKED_DEGREE,
    MAX_UNMARKED_DEGREE,
    ONE_TERM,
    RELATION_KINDS,
    TWO_TERM,
)
from pyChordweights.graph.intersection import intersection_graph, isolated_vertices
from pyChordweights.utils import PreconditionError, check_degree_cap

logger = logging.getLogger(__name__)

__all__ = [
    "adjacent_positions",
    "slide",
    "slide_with_position",
    "inverse_slide",
    "inverse_slide_with_position",
    "four_term_combination",
    "generate_relations",
    "random_slide_walk",
]


def _check_adjacent(diagram: MarkedChordDiagram, first: int, second: int) -> None:
    """Check that ``second`` immediately follows ``first`` cyclically on different chords."""
    size = len(diagram.word)
    if not (0 <= first < size and 0 <= second < size):
        raise PreconditionError(f"positions {first}, {second} are not endpoints of {diagram}")
    if (first + 1) % size != second:
        raise PreconditionError(f"position {second} does not immediately follow {first} in {diagram}")
    if diagram.word[first] == diagram.word[second]:
        raise PreconditionError(f"positions {first}, {second} are both on chord {diagram.word[first]}")


def _move(
    diagram: MarkedChordDiagram, a: int, b: int, after: bool, toggle: bool
) -> Tuple[MarkedChordDiagram, int]:
    """Move endpoint a next to the partner of endpoint b."""
    label = diagram.word[a]
    target = diagram.partner[b]
    word = list(diagram.word)
    del word[a]
    index = target - 1 if target > a else target
    insert_at = index + 1 if after else index
    word.insert(insert_at, label)
    marks = set(diagram.marks) ^ {label} if toggle else set(diagram.marks)
    return MarkedChordDiagram.from_word(word, marks), insert_at


def slide_with_position(diagram: MarkedChordDiagram, a: int, b: int) -> Tuple[MarkedChordDiagram, int]:
    """Slide endpoint a over the chord of the endpoint b that immediately follows it.

    Over an unmarked chord B, a is reinserted immediately after the other endpoint b' of B. Over a marked
    chord B, a is reinserted immediately before b' and the mark of the slid chord A is toggled.

    :param diagram: a diagram
    :param a: 0-based position of an endpoint of chord A
    :param b: the position right after a, on chord B != A
    :returns: the new diagram and the new position of the moved endpoint
    :raises PreconditionError: if b does not immediately follow a or both lie on one chord
    """
    _check_adjacent(diagram, a, b)
    over_marked = diagram.word[b] in diagram.marks
    return _move(diagram, a, b, after=not over_marked, toggle=over_marked)


def slide(diagram: MarkedChordDiagram, a: int, b: int) -> MarkedChordDiagram:
    """Slide endpoint a over the chord of the following endpoint b (see :func:`slide_with_position`)."""
    return slide_with_position(diagram, a, b)[0]


def inverse_slide_with_position(
    diagram: MarkedChordDiagram, a: int, b: int
) -> Tuple[MarkedChordDiagram, int]:
    """Slide endpoint a over the chord of the endpoint b that immediately precedes it.

    Over an unmarked chord, a is reinserted immediately before b'; over a marked chord, immediately after
    b' with the mark of A toggled. This undoes :func:`slide` over an unmarked chord; over a marked chord
    :func:`slide` is its own inverse.

    :param diagram: a diagram
    :param a: 0-based position of an endpoint of chord A
    :param b: the position right before a, on chord B != A
    :returns: the new diagram and the new position of the moved endpoint
    :raises PreconditionError: if b does not immediately precede a or both lie on one chord
    """
    _check_adjacent(diagram, b, a)
    over_marked = diagram.word[b] in diagram.marks
    return _move(diagram, a, b, after=over_marked, toggle=over_marked)


def inverse_slide(diagram: MarkedChordDiagram, a: int, b: int) -> MarkedChordDiagram:
    """Undo a slide (see :func:`inverse_slide_with_position`)."""
    return inverse_slide_with_position(diagram, a, b)[0]


def four_term_combination(diagram: MarkedChordDiagram, a: int, b: int) -> FormalCombination:
    """Build the 4-term relation for endpoint a followed by endpoint b.

    :param diagram: an unmarked diagram with a right before b
    :param a: position of an endpoint of chord A
    :param b: the next position, on chord B != A
    :returns: ``[a before b] - [a after b] - [a after b'] + [a before b']``, terms canonicalized
    :raises PreconditionError: for a marked diagram or non-adjacent endpoints
    """
    if diagram.is_marked():
        raise PreconditionError(f"4-term relations are built on unmarked diagrams, got {diagram}")
    _check_adjacent(diagram, a, b)
    word = list(diagram.word)
    word[a], word[b] = word[b], word[a]
    swapped = MarkedChordDiagram.from_word(word)
    after_partner, _ = _move(diagram, a, b, after=True, toggle=False)
    before_partner, _ = _move(diagram, a, b, after=False, toggle=False)
    return FormalCombination([(diagram, 1), (swapped, -1), (after_partner, -1), (before_partner, 1)])


def adjacent_positions(diagram: MarkedChordDiagram) -> List[int]:
    """Get every position p whose successor lies on a different chord."""
    size = len(diagram.word)
    return [p for p in range(size) if diagram.word[p] != diagram.word[(p + 1) % size]]


def _one_term(n: int) -> Iterator[FormalCombination]:
    for diagram in enumerate_diagrams(n):
        if isolated_vertices(intersection_graph(diagram)):
            yield FormalCombination.single(diagram)


def _four_term(n: int) -> Iterator[FormalCombination]:
    for diagram in enumerate_diagrams(n):
        size = len(diagram.word)
        for p in adjacent_positions(diagram):
            yield four_term_combination(diagram, p, (p + 1) % size)


def _two_term(n: int, marked: bool) -> Iterator[FormalCombination]:
    for diagram in enumerate_diagrams(n, marked=marked):
        size = len(diagram.word)
        for p in adjacent_positions(diagram):
            q = (p + 1) % size
            yield FormalCombination([(diagram, 1), (slide(diagram, p, q), -1)])
            yield FormalCombination([(diagram, 1), (inverse_slide(diagram, q, p), -1)])


def generate_relations(n: int, kind: str) -> Iterator[FormalCombination]:
    """Generate every relation of a kind in degree n.

    :param n: the degree
    :param kind: one of ``one_term``, ``four_term``, ``two_term`` (unmarked slides) or
        ``extended_two_term`` (slides on all marked diagrams)
    :returns: a deterministic stream of combinations
    :raises DegreeCapError: if n exceeds the cap for the kind
    :raises PreconditionError: for an unknown kind
    """
    if kind not in RELATION_KINDS:
        raise PreconditionError(f"unknown relation kind {kind!r}; choose from {list(RELATION_KINDS)}")
    if kind == EXTENDED_TWO_TERM:
        check_degree_cap(n, MAX_MARKED_DEGREE, f"{kind} relations")
        return _two_term(n, marked=True)
    check_degree_cap(n, MAX_UNMARKED_DEGREE, f"{kind} relations")
    if kind == ONE_TERM:
        return _one_term(n)
    if kind == FOUR_TERM:
        return _four_term(n)
    if kind == TWO_TERM:
        return _two_term(n, marked=False)
    raise AssertionError(kind)


def random_slide_walk(
    diagram: MarkedChordDiagram, steps: int, rng: Optional[random.Random] = None
) -> List[MarkedChordDiagram]:
    """Apply a random sequence of slides and inverse slides.

    :param diagram: the starting diagram
    :param steps: number of moves
    :param rng: the random source
    :returns: the diagrams visited, starting with ``diagram``; shorter when no move is possible
    """
    rng = rng or random.Random()
    walk = [diagram]
    current = diagram
    for _ in range(steps):
        positions = adjacent_positions(current)
        if not positions:
            break
        size = len(current.word)
        p = rng.choice(positions)
        q = (p + 1) % size
        current = slide(current, p, q) if rng.random() < 0.5 else inverse_slide(current, q, p)
        walk.append(current)
    return walk
