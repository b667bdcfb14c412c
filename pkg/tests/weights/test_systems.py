#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for the weight systems."""

import json
import os

import pytest

from pyChordweights.chord.diagram import (
    EMPTY_DIAGRAM,
    THETA,
    THETA_MARKED,
    X_DIAGRAM,
    caravan_diagram,
    connect_sum,
    enumerate_diagrams,
    parse_diagram,
)
from pyChordweights.constants import CONWAY, HOMFLY, INVARIANTS_KEYS, KAUFFMAN
from pyChordweights.graph.intersection import EMPTY_GRAPH, VERTEX, MarkedGraph, disjoint_union, intersection_graph
from pyChordweights.utils import PreconditionError, UnknownFunctionalError
from pyChordweights.weights import systems
from pyChordweights.weights.functionals import FUNCTIONALS, get_functional, parse_functionals
from pyChordweights.weights.polynomial import A, B, BivariatePolynomial

X = BivariatePolynomial(B)
EDGE = MarkedGraph.build(2, [(0, 1)])


def poly(expr) -> BivariatePolynomial:
    """Build a polynomial from a sympy expression in a and b (b standing for x)."""
    return BivariatePolynomial(expr)


@pytest.fixture(scope="module")
def pinned_invariants():
    """Reusable pinned invariant values."""
    data_file_path = os.path.join(os.path.dirname(__file__), "data", "pinned_invariants.json")
    with open(data_file_path) as f:
        return json.load(f)


def test_pinned_invariants(pinned_invariants):
    """Test diagram weight systems against pinned values."""
    for expected in pinned_invariants:
        diagram = parse_diagram(expected["diagram"])

        assert systems.conway(diagram) == expected["conway"]
        assert systems.invariants_report(diagram)["components"] == expected["components"]
        assert str(systems.homfly(diagram)) == expected["homfly"]
        assert str(systems.kauffman(diagram)) == expected["kauffman"]
        if expected["homfly_deframed"] is not None:
            assert str(systems.homfly_deframed(diagram)) == expected["homfly_deframed"]
            assert str(systems.kauffman_deframed(diagram)) == expected["kauffman_deframed"]


def test_conway():
    """Test the determinant weight system."""
    assert systems.conway(X_DIAGRAM) == 1
    assert systems.conway(THETA) == 0
    assert systems.conway(EMPTY_DIAGRAM) == 1
    assert systems.conway_surgery(parse_diagram("1 2 3 1 2 3")) == 0
    with pytest.raises(PreconditionError):
        systems.conway(THETA_MARKED)


def test_empty_diagram_values():
    """Test the unit values."""
    assert systems.homfly(EMPTY_DIAGRAM) == 1
    assert systems.kauffman(EMPTY_DIAGRAM) == 1
    assert systems.kauffman_surgery(EMPTY_DIAGRAM) == 1


@pytest.mark.parametrize(
    "graph, expected",
    [
        (EMPTY_GRAPH, poly(1)),
        (VERTEX, poly(1 - B)),
        (EDGE, poly(B - B**2)),
        (disjoint_union(VERTEX, VERTEX), poly((1 - B) ** 2)),
    ],
)
def test_s_poly(graph, expected):
    """Test S on small graphs."""
    assert systems.s_poly(graph) == expected


@pytest.mark.parametrize(
    "graph, expected",
    [
        (EMPTY_GRAPH, poly(B)),
        (VERTEX, poly(1 - B)),
        (EDGE, poly(1 - B)),
    ],
)
def test_t_poly(graph, expected):
    """Test T on small graphs."""
    assert systems.t_poly(graph) == expected


def test_deframed_graph_polynomials():
    """Test the deframed graph polynomials on small graphs."""
    assert systems.rank_poly_deframed(EMPTY_GRAPH) == 1
    assert systems.rank_poly_deframed(VERTEX) == 0
    assert systems.rank_poly_deframed(EDGE) == poly(B**2 - 1)
    assert systems.s_poly_deframed(VERTEX) == 0
    assert systems.s_poly_deframed(EDGE) == poly((1 - B) * (2 * B - 1))
    assert systems.t_poly_deframed(VERTEX) == 0
    assert systems.t_poly_deframed(EMPTY_GRAPH) == X
    assert systems.t_poly_deframed(EDGE) == poly(2 - 2 * B)


def test_displayed_t_differs_by_one():
    """Test the constant gap between the subset sum of T and its projection."""
    for graph in (VERTEX, EDGE, intersection_graph(parse_diagram("1 2 3 1 2 3"))):
        gap = systems.t_poly_deframed_displayed(graph) - systems.t_poly_deframed(graph)
        assert gap == 1
    assert systems.t_poly_deframed_displayed(EMPTY_GRAPH) == systems.t_poly_deframed(EMPTY_GRAPH)


def test_graph_deframe_matches_closed_forms():
    """Test the generic projection against the closed forms."""
    for diagram in enumerate_diagrams(4):
        g = intersection_graph(diagram)
        assert systems.graph_deframe(systems.rank_poly, g) == systems.rank_poly_deframed(g)
        assert systems.graph_deframe(systems.s_poly, g) == systems.s_poly_deframed(g)
        assert systems.graph_deframe(systems.t_poly, g) == systems.t_poly_deframed(g)


def test_nullity_polynomials():
    """Test N and U."""
    assert systems.nullity_poly(VERTEX) == X
    assert systems.nullity_poly(VERTEX, True) == poly(B - 1)
    assert systems.nullity_poly_deframed(VERTEX) == 0
    assert systems.nullity_poly_deframed(VERTEX, True) == 0
    with pytest.raises(PreconditionError):
        systems.s_poly(MarkedGraph.build(1, marks=[0]))


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
def test_routes_agree(n):
    """Test closed forms against the surgery routes."""
    for diagram in enumerate_diagrams(n):
        assert systems.conway(diagram) == systems.conway_surgery(diagram)
        assert systems.homfly(diagram) == systems.homfly_surgery(diagram)
        assert systems.kauffman(diagram) == systems.kauffman_surgery(diagram)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_deframe_matches_closed_forms(n):
    """Test the deframing projection against the closed deframed forms."""
    for diagram in enumerate_diagrams(n):
        assert systems.deframe(HOMFLY, diagram) == systems.homfly_deframed(diagram)
        assert systems.deframe(KAUFFMAN, diagram) == systems.kauffman_deframed(diagram)
        assert systems.deframe(CONWAY, diagram) == systems.conway(diagram)


def test_deframe_examples():
    """Test the deframing projection on the crossing pair and the isolated chord."""
    assert systems.deframe(HOMFLY, X_DIAGRAM) == poly(A**2 - A**2 * B**2)
    assert systems.deframe(KAUFFMAN, THETA) == 0
    assert systems.kauffman_deframed(X_DIAGRAM) == poly(A**2 * (B - 1) * (2 - B))
    with pytest.raises(UnknownFunctionalError):
        systems.deframe("jones", X_DIAGRAM)


def test_nullity_identities():
    """Test H = a^k N(b) and K = a^k U(b)."""
    for diagram in enumerate_diagrams(4):
        g = intersection_graph(diagram)
        a_power = BivariatePolynomial.monomial(diagram.degree, 0)
        assert systems.homfly(diagram) == a_power * systems.nullity_poly(g)
        assert systems.kauffman(diagram) == a_power * systems.nullity_poly(g, True)


def test_kauffman_on_caravans():
    """Test K^m(caravan) = a^k b^n2."""
    for n1, n2, n3 in [(0, 0, 1), (1, 1, 0), (1, 1, 1), (2, 0, 1), (0, 3, 0)]:
        caravan = caravan_diagram(n1, n2, n3)
        assert systems.kauffman_marked(caravan) == BivariatePolynomial.monomial(n1 + n2 + 2 * n3, n2)


def test_homfly_rank_additivity():
    """Test the value of H on a product."""
    product = connect_sum(X_DIAGRAM, THETA)

    assert systems.homfly(product) == BivariatePolynomial.monomial(3, 1)


def test_invariants_report():
    """Test the report emitted by the CLI."""
    report = systems.invariants_report(X_DIAGRAM)

    assert tuple(report) == INVARIANTS_KEYS
    assert report["det"] == 1
    assert report["rank"] == 2
    assert report["components"] == 1
    assert report["conway"] == 1
    assert report["homfly"] == "a^2"
    assert report["kauffman"] == "a^2*b - a^2"


def test_invariants_report_debug_and_marked():
    """Test the debug fields and the marked variant."""
    debug = systems.invariants_report(X_DIAGRAM, debug=True)
    marked = systems.invariants_report(parse_diagram("1# 2# 1# 2#"))

    assert debug["t_deframed"] == "-2*x + 2"
    assert debug["t_deframed_displayed"] == "-2*x + 3"
    assert marked["conway"] is None
    assert marked["rank"] == 1
    assert marked["kauffman_marked"] == "a^2*b"


def test_functional_registry():
    """Test lookup and marked dispatch."""
    kauffman = get_functional("kauffman")

    assert kauffman(THETA_MARKED) == BivariatePolynomial.monomial(1, 0)
    assert kauffman(THETA) == poly(A * B - A)
    assert [f.name for f in parse_functionals("conway, homfly")] == ["conway", "homfly"]
    assert "t_deframed_displayed" in FUNCTIONALS
    with pytest.raises(UnknownFunctionalError):
        get_functional("jones")
    with pytest.raises(PreconditionError):
        get_functional("homfly")(THETA_MARKED)


def test_marked_value_on_unmarked_diagrams():
    """Test that the marked evaluator gives ``K^m`` rather than ``K`` on a diagram with no marks."""
    kauffman = get_functional("kauffman")

    assert kauffman.marked_value(THETA) == BivariatePolynomial.monomial(1, 1)
    assert kauffman.marked_value(THETA) != kauffman(THETA)
    assert get_functional("rank").marked_value(THETA) == get_functional("rank")(THETA)
    with pytest.raises(PreconditionError):
        get_functional("homfly").marked_value(THETA)


def test_deframable_registry():
    """Test the names accepted by the generic deframing projection."""
    assert sorted(systems.DEFRAMABLE) == sorted(
        ["conway", "homfly", "kauffman", "rank", "s", "t", "nullity", "nullity_marked"]
    )
    for name in systems.DEFRAMABLE:
        assert systems.deframe(name, THETA) == 0
