#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for band surgery."""

import pytest

from pyChordweights.chord.diagram import EMPTY_DIAGRAM, enumerate_diagrams, parse_diagram
from pyChordweights.graph.intersection import intersection_graph
from pyChordweights.surgery import boundary_components, surgery_trace
from pyChordweights.weights.systems import graph_rank


@pytest.mark.parametrize(
    "text, expected",
    [
        ("1 1", 2),
        ("1# 1#", 1),
        ("1 2 1 2", 1),
        ("1 2 3 1 2 3", 2),
        ("1 1 2 2", 3),
        ("1# 2# 1# 2#", 2),
    ],
)
def test_boundary_components(text, expected):
    """Test hand-traced component counts."""
    assert boundary_components(parse_diagram(text)) == expected


def test_empty_diagram():
    """Test that the bare circle stays one circle."""
    trace = surgery_trace(EMPTY_DIAGRAM)

    assert trace.components == 1
    assert trace.cycles == (((0, True),),)


def test_every_arc_used_once():
    """Test that the cycles partition the arcs."""
    for diagram in enumerate_diagrams(3, marked=True):
        trace = surgery_trace(diagram)
        arcs = sorted(arc for cycle in trace.cycles for arc, _ in cycle)

        assert arcs == list(range(2 * diagram.degree))
        assert trace.components == len(trace.cycles)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_rank_component_identity(n):
    """Test c = k - rank + 1 on marked diagrams."""
    for diagram in enumerate_diagrams(n, marked=True):
        assert boundary_components(diagram) == n - graph_rank(intersection_graph(diagram)) + 1


def test_trace_to_dict():
    """Test the JSON view of a trace."""
    view = surgery_trace(parse_diagram("1 1")).to_dict()

    assert view == {"components": 2, "cycles": [[[0, "fwd"]], [[1, "fwd"]]]}
