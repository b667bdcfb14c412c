#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for relation checks and caravan reduction."""

import pytest

from pyChordweights.chord.diagram import THETA_MARKED, X_DIAGRAM, caravan_diagram, parse_diagram
from pyChordweights.constants import EXTENDED_TWO_TERM, FOUR_TERM, ONE_TERM, TWO_TERM
from pyChordweights.gf2 import CaravanClass
from pyChordweights.relations.checks import caravan_normal_form, check_vanishing
from pyChordweights.utils import DegreeCapError, PreconditionError, UnknownFunctionalError
from pyChordweights.weights.functionals import get_functional


@pytest.mark.parametrize(
    "text, expected",
    [
        ("1 2 1 2", CaravanClass(0, 0, 1)),
        ("1 1 2 2", CaravanClass(0, 2, 0)),
        ("1# 1#", CaravanClass(1, 0, 0)),
        ("1# 2# 1# 2#", CaravanClass(1, 1, 0)),
        ("1 2 3 1 2 3", CaravanClass(0, 1, 1)),
    ],
)
def test_caravan_normal_form(text, expected):
    """Test the caravan of small diagrams."""
    assert caravan_normal_form(parse_diagram(text)) == expected


def test_caravans_are_fixed_points():
    """Test that a realized caravan reduces to itself."""
    for counts in [(1, 0, 0), (0, 1, 1), (2, 1, 0), (0, 0, 2)]:
        assert caravan_normal_form(caravan_diagram(*counts)).as_tuple() == counts
    assert caravan_diagram(1, 0, 0) == THETA_MARKED
    assert caravan_diagram(0, 0, 1) == X_DIAGRAM


@pytest.mark.parametrize(
    "name, n, kind",
    [
        ("conway", 3, FOUR_TERM),
        ("homfly", 3, FOUR_TERM),
        ("kauffman", 3, FOUR_TERM),
        ("homfly_deframed", 3, FOUR_TERM),
        ("conway", 3, ONE_TERM),
        ("kauffman_deframed", 3, ONE_TERM),
        ("t_deframed", 3, ONE_TERM),
        ("rank", 3, TWO_TERM),
        ("kauffman", 3, EXTENDED_TWO_TERM),
        ("components", 3, EXTENDED_TWO_TERM),
    ],
)
def test_relations_vanish(name, n, kind):
    """Test functionals on relations they are known to respect."""
    report = check_vanishing(name, n, kind, workers=1)

    assert report["failures"] == 0
    assert report["failing"] == []
    assert report["total"] > 0


def test_failures_are_reported():
    """Test the report of a functional that does not vanish on 1-term relations."""
    report = check_vanishing(get_functional("homfly"), 2, ONE_TERM, workers=1)

    assert report == {
        "functional": "homfly",
        "kind": ONE_TERM,
        "degree": 2,
        "total": 1,
        "failures": 1,
        "failing": report["failing"],
    }
    assert len(report["failing"]) == 1


def test_displayed_t_fails_one_term():
    """Test that the subset sum of T without the correction misses the 1-term relations."""
    report = check_vanishing("t_deframed_displayed", 2, ONE_TERM, workers=1)

    assert report["failures"] == report["total"] == 1


def test_check_errors():
    """Test unknown functionals and degree caps."""
    with pytest.raises(UnknownFunctionalError):
        check_vanishing("jones", 2, FOUR_TERM)
    with pytest.raises(DegreeCapError):
        check_vanishing("conway", 7, FOUR_TERM)


def test_kauffman_respects_extended_two_term_in_degree_four():
    """Test that every term of a marked slide relation, marked or not, is valued by ``K^m``."""
    report = check_vanishing("kauffman", 4, EXTENDED_TWO_TERM, workers=1)

    assert report["total"] > 0
    assert report["failures"] == 0


def test_extended_two_term_needs_marked_evaluator():
    """Test that functionals undefined on marked diagrams are refused for marked relations."""
    with pytest.raises(PreconditionError):
        check_vanishing("homfly", 2, EXTENDED_TWO_TERM, workers=1)


@pytest.mark.parametrize(
    "name, n, kind",
    [
        ("homfly", 4, ONE_TERM),
        ("homfly", 3, FOUR_TERM),
        ("kauffman", 3, EXTENDED_TWO_TERM),
    ],
)
def test_parallel_report_matches_serial(name, n, kind):
    """Test that worker processes give the same report as a serial run."""
    assert check_vanishing(name, n, kind, workers=2) == check_vanishing(name, n, kind, workers=1)
