# coding: utf-8

"""Python module for (marked) chord diagrams on an oriented circle."""

import logging
import random
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from pyChordweights.chord.combination import FormalCombination
from pyChordweights.constants import MARK_TOKEN
from pyChordweights.utils import MalformedDiagramError, PreconditionError, subsets

logger = logging.getLogger(__name__)

__all__ = [
    "MarkedChordDiagram",
    "EMPTY_DIAGRAM",
    "THETA",
    "THETA_MARKED",
    "X_DIAGRAM",
    "parse_diagram",
    "canonical_form",
    "connect_sum",
    "remove_chords",
    "keep_chords",
    "with_marks",
    "coproduct_terms",
    "coproduct",
    "multiply_combinations",
    "marking_expansion",
    "forget_marked",
    "caravan_diagram",
    "enumerate_diagrams",
    "random_diagram",
]


def _normalize(word: Sequence, marks: Iterable) -> Tuple[Tuple[int, ...], FrozenSet[int]]:
    """Relabel chords 1..k by first occurrence."""
    relabel: Dict = {}
    for label in word:
        if label not in relabel:
            relabel[label] = len(relabel) + 1
    return tuple(relabel[label] for label in word), frozenset(relabel[m] for m in marks)


@dataclass(frozen=True)
class MarkedChordDiagram:
    """A chord diagram read once around the oriented circle, with a set of marked chords.

    ``word`` lists the chord label at each of the 2k endpoints. Labels are ``1..k`` numbered by first
    occurrence; use :meth:`from_word` to build a diagram from arbitrary labels.
    """

    word: Tuple[int, ...]
    marks: FrozenSet[int] = field(default_factory=frozenset)

    def __post_init__(self):
        counts = Counter(self.word)
        bad = sorted(label for label, count in counts.items() if count != 2)
        if bad:
            raise MalformedDiagramError(f"chord labels {bad} do not occur exactly twice")
        expected, _ = _normalize(self.word, ())
        if expected != self.word:
            raise MalformedDiagramError("chord labels must be 1..k numbered by first occurrence")
        if not self.marks <= set(counts):
            raise MalformedDiagramError(f"marks {sorted(self.marks - set(counts))} are not chords")

    @classmethod
    def from_word(cls, word: Sequence, marks: Iterable = ()) -> "MarkedChordDiagram":
        """Build a diagram from a word with arbitrary hashable labels.

        :param word: the chord labels around the circle
        :param marks: labels of the marked chords
        :returns: the diagram with labels normalized by first occurrence
        :raises MalformedDiagramError: if a label does not occur exactly twice
        """
        counts = Counter(word)
        bad = [label for label, count in counts.items() if count != 2]
        if bad:
            raise MalformedDiagramError(f"chord labels {bad} do not occur exactly twice")
        marks = set(marks)
        if not marks <= set(counts):
            raise MalformedDiagramError(f"marks {sorted(map(str, marks - set(counts)))} are not chords")
        normalized, normalized_marks = _normalize(word, marks)
        return cls(normalized, normalized_marks)

    @property
    def degree(self) -> int:
        """Get the number of chords."""
        return len(self.word) // 2

    @property
    def chords(self) -> Tuple[int, ...]:
        """Get the chord labels ``1..k``."""
        return tuple(range(1, self.degree + 1))

    @property
    def endpoints(self) -> Dict[int, Tuple[int, int]]:
        """Get the two endpoint positions of every chord."""
        found: Dict[int, List[int]] = {}
        for position, label in enumerate(self.word):
            found.setdefault(label, []).append(position)
        return {label: (first, second) for label, (first, second) in found.items()}

    @property
    def partner(self) -> Tuple[int, ...]:
        """Get, for every endpoint position, the position of the other endpoint of its chord."""
        partner = [0] * len(self.word)
        for first, second in self.endpoints.values():
            partner[first] = second
            partner[second] = first
        return tuple(partner)

    def is_marked(self) -> bool:
        """Check whether any chord is marked."""
        return bool(self.marks)

    def canonical(self) -> "MarkedChordDiagram":
        """Get the canonical representative of the rotation class."""
        return canonical_form(self)

    def tokens(self) -> Tuple[Tuple[int, int], ...]:
        """Get the (label, mark bit) token sequence."""
        return tuple((label, int(label in self.marks)) for label in self.word)

    def sort_key(self):
        """Get a deterministic ordering key (degree first, then tokens)."""
        return (self.degree, self.tokens())

    def __str__(self) -> str:
        return " ".join(
            f"{label}{MARK_TOKEN}" if label in self.marks else str(label) for label in self.word
        )


EMPTY_DIAGRAM = MarkedChordDiagram(())
THETA = MarkedChordDiagram((1, 1))
THETA_MARKED = MarkedChordDiagram((1, 1), frozenset({1}))
X_DIAGRAM = MarkedChordDiagram((1, 2, 1, 2))


def parse_diagram(text: str) -> MarkedChordDiagram:
    """Parse a whitespace-separated token string into a diagram.

    A token is a chord label with an optional trailing ``#``; a chord is marked when either of its
    occurrences carries the ``#``.

    :param text: e.g. ``"1 2# 1 2"``
    :returns: the diagram, labels normalized to 1..k by first occurrence
    :raises MalformedDiagramError: if a token is empty or a label does not occur exactly twice
    """
    word = []
    marks = set()
    for token in text.split():
        label = token.rstrip(MARK_TOKEN)
        if not label:
            raise MalformedDiagramError(f"token {token!r} has no chord label")
        if len(token) - len(label) > 1:
            raise MalformedDiagramError(f"token {token!r} carries more than one mark")
        word.append(label)
        if token.endswith(MARK_TOKEN):
            marks.add(label)
    return MarkedChordDiagram.from_word(word, marks)


@lru_cache(maxsize=1 << 16)
def canonical_form(diagram: MarkedChordDiagram) -> MarkedChordDiagram:
    """Get the canonical representative of a diagram up to rotation.

    Every rotation of the word is relabelled by first occurrence, each token carries its mark bit,
    and the lexicographically smallest token sequence wins. Reflections are not identified.

    :param diagram: a diagram
    :returns: the canonical diagram; equal diagrams have equal canonical forms
    """
    word = diagram.word
    best = None
    for shift in range(len(word)):
        rotated = word[shift:] + word[:shift]
        relabelled, marks = _normalize(rotated, diagram.marks)
        tokens = tuple((label, int(label in marks)) for label in relabelled)
        if best is None or tokens < best[0]:
            best = (tokens, relabelled, marks)
    if best is None:
        return diagram
    return MarkedChordDiagram(best[1], best[2])


def connect_sum(first: MarkedChordDiagram, second: MarkedChordDiagram) -> MarkedChordDiagram:
    """Multiply two diagrams by concatenating their words.

    :param first: the left factor
    :param second: the right factor, relabelled above the chords of ``first``
    :returns: the connect sum, of degree ``deg(first) + deg(second)``
    """
    shift = first.degree
    return MarkedChordDiagram(
        first.word + tuple(label + shift for label in second.word),
        first.marks | frozenset(mark + shift for mark in second.marks),
    )


def keep_chords(diagram: MarkedChordDiagram, chords: Iterable[int]) -> MarkedChordDiagram:
    """Remove every chord not in the given set.

    :param diagram: a diagram
    :param chords: labels of the chords to keep
    :returns: the sub-diagram, relabelled
    """
    keep = set(chords)
    word = [label for label in diagram.word if label in keep]
    return MarkedChordDiagram.from_word(word, diagram.marks & keep)


def remove_chords(diagram: MarkedChordDiagram, chords: Iterable[int]) -> MarkedChordDiagram:
    """Remove the given chords.

    :param diagram: a diagram
    :param chords: labels of the chords to remove
    :returns: the sub-diagram, relabelled
    """
    drop = set(chords)
    return keep_chords(diagram, (label for label in diagram.chords if label not in drop))


def with_marks(diagram: MarkedChordDiagram, marks: Iterable[int]) -> MarkedChordDiagram:
    """Replace the marked-chord set of a diagram.

    :param diagram: a diagram
    :param marks: labels to mark
    :returns: the same chords with exactly ``marks`` marked
    """
    return MarkedChordDiagram(diagram.word, frozenset(marks))


def coproduct_terms(
    diagram: MarkedChordDiagram,
) -> Iterator[Tuple[FrozenSet[int], MarkedChordDiagram, MarkedChordDiagram]]:
    """Iterate over the 2^n raw terms of the coproduct.

    :param diagram: a diagram of degree n
    :returns: triples ``(J, D'_J, D''_J)`` where ``D'_J`` drops the chords of J and ``D''_J`` keeps them
    """
    for chords in subsets(diagram.chords):
        yield chords, remove_chords(diagram, chords), keep_chords(diagram, chords)


def coproduct(diagram: MarkedChordDiagram) -> FormalCombination:
    """Compute the coproduct as a combination of tensor pairs.

    Equal tensor terms are merged, so the coefficients sum to 2^n.

    :param diagram: a diagram
    :returns: the sum over chord subsets J of ``D'_J (x) D''_J``
    """
    return FormalCombination(((first, second), 1) for _, first, second in coproduct_terms(diagram))


def _connect_terms(left, right):
    if isinstance(left, tuple):
        return tuple(connect_sum(x, y) for x, y in zip(left, right))
    return connect_sum(left, right)


def multiply_combinations(left: FormalCombination, right: FormalCombination) -> FormalCombination:
    """Multiply two combinations of diagrams (or of tensor pairs, componentwise).

    :param left: the left factor
    :param right: the right factor
    :returns: the bilinear product under connect sum
    """
    return left.product(right, _connect_terms)


def marking_expansion(diagram: MarkedChordDiagram) -> FormalCombination:
    """Expand an unmarked diagram as the signed sum over all markings.

    :param diagram: an unmarked diagram
    :returns: the sum over chord subsets J of ``(-1)^|J| D^J``
    :raises PreconditionError: if the diagram already has marked chords
    """
    if diagram.is_marked():
        raise PreconditionError(f"marking expansion needs an unmarked diagram, got {diagram}")
    return FormalCombination(
        (with_marks(diagram, chords), (-1) ** len(chords)) for chords in subsets(diagram.chords)
    )


def forget_marked(combination: FormalCombination) -> FormalCombination:
    """Project marked diagrams to unmarked ones by sending every marked term to zero.

    :param combination: a combination of diagrams or tensor pairs of diagrams
    :returns: the terms without any marked chord
    """

    def _unmarked(obj) -> bool:
        parts = obj if isinstance(obj, tuple) else (obj,)
        return not any(part.is_marked() for part in parts)

    return combination.filter(_unmarked)


def caravan_diagram(marked_ones: int, unmarked_ones: int, crossings: int) -> MarkedChordDiagram:
    """Realize a marked caravan as a diagram.

    :param marked_ones: number of marked isolated chords
    :param unmarked_ones: number of unmarked isolated chords
    :param crossings: number of unmarked crossing pairs
    :returns: the canonical form of ``Theta_m^n1 . Theta^n2 . X^n3``
    """
    result = EMPTY_DIAGRAM
    for factor, count in ((THETA_MARKED, marked_ones), (THETA, unmarked_ones), (X_DIAGRAM, crossings)):
        for _ in range(count):
            result = connect_sum(result, factor)
    return canonical_form(result)


def _normalized_words(n: int) -> Iterator[Tuple[int, ...]]:
    """Iterate over all (2n-1)!! perfect matchings of 2n points as first-occurrence words."""
    size = 2 * n
    word = [0] * size

    def place(label: int) -> Iterator[Tuple[int, ...]]:
        if label > n:
            yield tuple(word)
            return
        first = word.index(0)
        word[first] = label
        for partner in range(first + 1, size):
            if word[partner] == 0:
                word[partner] = label
                yield from place(label + 1)
                word[partner] = 0
        word[first] = 0

    yield from place(1)


@lru_cache(maxsize=32)
def _canonical_diagrams(n: int, marked: bool) -> Tuple[MarkedChordDiagram, ...]:
    found = {canonical_form(MarkedChordDiagram(word)) for word in _normalized_words(n)}
    if marked:
        found = {
            canonical_form(with_marks(diagram, chords))
            for diagram in found
            for chords in subsets(diagram.chords)
        }
    logger.debug("degree %d (marked=%s): %d canonical diagrams", n, marked, len(found))
    return tuple(sorted(found, key=MarkedChordDiagram.sort_key))


def enumerate_diagrams(n: int, marked: bool = False) -> Iterator[MarkedChordDiagram]:
    """Enumerate every diagram of degree n exactly once up to rotation.

    :param n: the degree
    :param marked: if True, every marking of every diagram is enumerated as well
    :returns: an iterator of canonical diagrams in deterministic order
    :raises PreconditionError: if ``n`` is negative
    """
    if n < 0:
        raise PreconditionError(f"degree must be non-negative, got {n}")
    return iter(_canonical_diagrams(n, marked))


def random_diagram(n: int, rng: Optional[random.Random] = None, marked: bool = False) -> MarkedChordDiagram:
    """Draw a uniformly random perfect matching of 2n points as a diagram.

    :param n: the degree
    :param rng: the random source
    :param marked: if True, every chord is marked independently with probability 1/2
    :returns: the diagram (not canonicalized)
    """
    rng = rng or random.Random()
    labels = [label for label in range(1, n + 1) for _ in range(2)]
    rng.shuffle(labels)
    marks = {label for label in range(1, n + 1) if marked and rng.random() < 0.5}
    return MarkedChordDiagram.from_word(labels, marks)
