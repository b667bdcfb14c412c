#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for chord diagrams."""

import random

import pytest

from pyChordweights.chord.combination import FormalCombination
from pyChordweights.chord.diagram import (
    EMPTY_DIAGRAM,
    THETA,
    THETA_MARKED,
    X_DIAGRAM,
    MarkedChordDiagram,
    canonical_form,
    caravan_diagram,
    connect_sum,
    coproduct,
    coproduct_terms,
    enumerate_diagrams,
    forget_marked,
    keep_chords,
    marking_expansion,
    multiply_combinations,
    parse_diagram,
    random_diagram,
    remove_chords,
)
from pyChordweights.utils import MalformedDiagramError, PreconditionError


def test_parse_diagram():
    """Test parsing labels and marks."""
    diagram = parse_diagram("1 2# 1 2")

    assert diagram.word == (1, 2, 1, 2)
    assert diagram.marks == frozenset({2})
    assert diagram.degree == 2
    assert parse_diagram("b a b a") == X_DIAGRAM
    assert parse_diagram("") == EMPTY_DIAGRAM


@pytest.mark.parametrize("text", ["1 2 1", "1 1 1", "1## 1", "# 1 1"])
def test_parse_diagram_malformed(text):
    """Test that malformed words are rejected."""
    with pytest.raises(MalformedDiagramError):
        parse_diagram(text)


def test_unnormalized_word_rejected():
    """Test that the constructor only accepts first-occurrence labels."""
    with pytest.raises(MalformedDiagramError):
        MarkedChordDiagram((2, 1, 2, 1))


def test_str_and_partner():
    """Test rendering and endpoint lookup."""
    assert str(THETA_MARKED) == "1# 1#"
    assert str(X_DIAGRAM) == "1 2 1 2"
    assert X_DIAGRAM.partner == (2, 3, 0, 1)
    assert X_DIAGRAM.endpoints == {1: (0, 2), 2: (1, 3)}


def test_canonical_form():
    """Test the lexicographically smallest rotation."""
    assert canonical_form(MarkedChordDiagram.from_word([1, 2, 2, 1])) == MarkedChordDiagram((1, 1, 2, 2))
    assert canonical_form(MarkedChordDiagram.from_word([1, 1, 2, 2], marks=[1])) == MarkedChordDiagram(
        (1, 1, 2, 2), frozenset({2})
    )
    assert canonical_form(parse_diagram("1 2 3 2 3 1")) == canonical_form(parse_diagram("1 1 2 3 2 3"))


@pytest.mark.parametrize("n, expected", [(0, 1), (1, 1), (2, 2), (3, 5), (4, 18), (5, 105), (6, 902)])
def test_enumerate_diagrams(n, expected):
    """Test the number of diagrams up to rotation."""
    diagrams = list(enumerate_diagrams(n))

    assert len(diagrams) == expected
    assert all(d == canonical_form(d) for d in diagrams)


def test_enumerate_marked_diagrams():
    """Test enumeration with every marking."""
    assert list(enumerate_diagrams(1, marked=True)) == [THETA, THETA_MARKED]
    assert len(list(enumerate_diagrams(2, marked=True))) == 6
    with pytest.raises(PreconditionError):
        enumerate_diagrams(-1)


def test_connect_sum_and_sub_diagrams():
    """Test products and chord removal."""
    product = connect_sum(THETA, X_DIAGRAM)
    base = parse_diagram("1 2 3 1 2 3")

    assert product.word == (1, 1, 2, 3, 2, 3)
    assert keep_chords(base, {1, 3}) == X_DIAGRAM
    assert remove_chords(base, {2}) == X_DIAGRAM
    assert remove_chords(base, {1, 2, 3}) == EMPTY_DIAGRAM


def test_coproduct():
    """Test the coproduct of the crossing pair."""
    terms = list(coproduct_terms(X_DIAGRAM))
    delta = coproduct(X_DIAGRAM)

    assert len(terms) == 4
    assert delta.total_weight() == 4
    assert delta.coefficient((EMPTY_DIAGRAM, X_DIAGRAM)) == 1
    assert delta.coefficient((THETA, THETA)) == 2


def test_coproduct_is_multiplicative():
    """Test that the coproduct of a product is the product of coproducts."""
    left = coproduct(connect_sum(X_DIAGRAM, THETA))
    right = multiply_combinations(coproduct(X_DIAGRAM), coproduct(THETA))

    assert left == right


def test_marking_expansion():
    """Test the signed sum over markings."""
    expansion = marking_expansion(X_DIAGRAM)

    assert expansion.coefficient(X_DIAGRAM) == 1
    assert expansion.coefficient(parse_diagram("1# 2 1# 2")) == -2
    assert expansion.coefficient(parse_diagram("1# 2# 1# 2#")) == 1
    assert expansion.total_weight() == 0
    assert forget_marked(expansion) == FormalCombination.single(X_DIAGRAM)
    with pytest.raises(PreconditionError):
        marking_expansion(THETA_MARKED)


def test_caravan_diagram():
    """Test caravan realizations."""
    assert caravan_diagram(0, 0, 1) == X_DIAGRAM
    assert caravan_diagram(1, 1, 0) == canonical_form(connect_sum(THETA, THETA_MARKED))
    assert caravan_diagram(0, 0, 0) == EMPTY_DIAGRAM
    assert caravan_diagram(2, 1, 1).degree == 5


def test_random_diagram():
    """Test random diagrams."""
    rng = random.Random(7)
    diagram = random_diagram(4, rng, marked=True)

    assert diagram.degree == 4
    assert diagram.marks <= set(diagram.chords)
