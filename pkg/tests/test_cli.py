#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for the command line interface."""

import json

import pytest
from click.testing import CliRunner

from pyChordweights.cli import main


@pytest.fixture(scope="module")
def runner():
    """Reusable click runner."""
    return CliRunner()


def records(result):
    """Parse the JSON lines of a run."""
    return [json.loads(line) for line in result.output.splitlines() if line.startswith("{")]


def test_invariants(runner):
    """Test the invariants of the crossing pair."""
    result = runner.invoke(main, ["invariants", "1 2 1 2"])
    (record,) = records(result)

    assert result.exit_code == 0
    assert record["diagram"] == "1 2 1 2"
    assert record["conway"] == 1
    assert record["homfly"] == "a^2"
    assert record["kauffman"] == "a^2*b - a^2"
    assert record["components"] == 1


def test_invariants_from_stdin(runner):
    """Test reading one diagram per line."""
    result = runner.invoke(main, ["invariants", "--debug"], input="1 1\n\n1 2 3 1 2 3\n")
    found = records(result)

    assert result.exit_code == 0
    assert [record["components"] for record in found] == [2, 2]
    assert all("t_deframed_displayed" in record for record in found)


@pytest.mark.parametrize(
    "args",
    [
        ["invariants", "1 2 1"],
        ["invariants", "1## 1"],
        ["enumerate", "-n", "7"],
        ["quotient-dim", "-n", "6", "--space", "a"],
        ["check", "--kind", "ext2t", "--weights", "homfly", "-n", "2"],
        ["check", "--kind", "4t", "--weights", "jones", "-n", "2"],
        ["check", "--kind", "5t", "--weights", "conway", "-n", "2"],
    ],
)
def test_usage_errors(runner, args):
    """Test that malformed input and bad options exit with 1."""
    result = runner.invoke(main, args)

    assert result.exit_code == 1
    assert records(result) == []


@pytest.mark.parametrize("args, expected", [(["-n", "3"], 5), (["-n", "2", "--marked"], 6), (["-n", "0"], 1)])
def test_enumerate(runner, args, expected):
    """Test diagram enumeration."""
    result = runner.invoke(main, ["enumerate", *args])

    assert result.exit_code == 0
    assert len(records(result)) == expected


def test_surgery(runner):
    """Test the component count and trace."""
    result = runner.invoke(main, ["surgery", "1 1 2 2", "--trace"])
    (record,) = records(result)

    assert record["components"] == 3
    assert len(record["cycles"]) == 3


def test_caravan_and_graph(runner):
    """Test the caravan reduction and the intersection graph."""
    caravan = records(runner.invoke(main, ["caravan", "1 2 3 1 2 3"]))[0]
    graph = records(runner.invoke(main, ["graph", "1# 2 1# 2"]))[0]

    assert caravan["caravan"] == [0, 1, 1]
    assert graph["vertices"] == 2
    assert graph["edges"] == [[0, 1]]
    assert graph["marks"] == [0]


def test_check(runner):
    """Test relation checks and the failure exit code."""
    passing = runner.invoke(main, ["check", "--kind", "4t", "--weights", "conway,homfly", "-n", "3"])
    failing = runner.invoke(main, ["check", "--kind", "1t", "--weights", "homfly", "-n", "2"])

    assert passing.exit_code == 0
    assert [record["failures"] for record in records(passing)] == [0, 0]
    assert failing.exit_code == 2
    assert records(failing)[0]["failures"] == 1


def test_quotient_dim(runner):
    """Test the exact quotient dimensions."""
    result = runner.invoke(main, ["quotient-dim", "-n", "3", "--space", "bm", "--classes"])
    (record,) = records(result)

    assert result.exit_code == 0
    assert record["dimension"] == 5
    assert len(record["class_of"]) == record["diagrams"]


def test_selftest(runner):
    """Test a selected acceptance criterion."""
    result = runner.invoke(main, ["selftest", "--criterion", "11"])
    (record,) = records(result)

    assert result.exit_code == 0
    assert record["passed"]


def test_human_output(runner):
    """Test the table rendering."""
    result = runner.invoke(main, ["--human", "enumerate", "-n", "2"])

    assert result.exit_code == 0
    assert "1 2 1 2" in result.output
    assert records(result) == []
