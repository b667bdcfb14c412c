# -*- coding: utf-8 -*-

"""Command line interface for :mod:`pyChordweights`.

Why does this file exist, and why not put this in ``__main__``? You might be tempted to import things from ``__main__``
later, but that will cause problems--the code will get executed twice:

- When you run ``python3 -m pyChordweights`` python will execute``__main__.py`` as a script.
  That means there won't be any ``pyChordweights.__main__`` in ``sys.modules``.
- When you import __main__ it will get executed again (as a module) because
  there's no ``pyChordweights.__main__`` in ``sys.modules``.

.. seealso:: https://click.palletsprojects.com/en/8.1.x/setuptools/#setuptools-integration
"""

import json
import logging
import sys
from typing import Dict, Iterable, List, Tuple

import click
import pandas as pd

from pyChordweights.acceptance import CRITERIA, run_acceptance
from pyChordweights.chord.diagram import caravan_diagram, enumerate_diagrams, parse_diagram
from pyChordweights.constants import (
    CLI_KINDS,
    CLI_SPACES,
    EXIT_CHECK_FAILED,
    EXIT_OK,
    EXIT_PARSE_ERROR,
    MARKED_KINDS,
    MAX_MARKED_DEGREE,
    MAX_UNMARKED_DEGREE,
)
from pyChordweights.graph.intersection import intersection_graph
from pyChordweights.relations.checks import caravan_normal_form, check_vanishing
from pyChordweights.relations.span import span_analysis
from pyChordweights.surgery import surgery_trace
from pyChordweights.utils import check_degree_cap
from pyChordweights.version import VERSION
from pyChordweights.weights.functionals import parse_functionals
from pyChordweights.weights.systems import invariants_report

__all__ = [
    "main",
]

logger = logging.getLogger(__name__)


class ReportGroup(click.Group):
    """Click group that maps usage and domain errors to exit code 1 and returns command exit codes."""

    def main(self, *args, **kwargs):
        """Run the CLI and exit with the command's status."""
        kwargs["standalone_mode"] = False
        try:
            status = super().main(*args, **kwargs)
        except click.ClickException as error:
            error.show()
            sys.exit(EXIT_PARSE_ERROR)
        except ValueError as error:
            click.echo(f"Error: {error}", err=True)
            sys.exit(EXIT_PARSE_ERROR)
        sys.exit(status or EXIT_OK)


def _emit(records: List[Dict[str, object]]) -> None:
    """Print records as JSON lines, or as one table with ``--human``."""
    ctx = click.get_current_context()
    if ctx.find_root().obj.get("human"):
        frame = pd.DataFrame(records)
        click.echo(frame.to_string(index=False))
        return
    for record in records:
        click.echo(json.dumps(record))


def _progress() -> bool:
    return click.get_current_context().find_root().obj.get("progress", False)


def _read_diagrams(texts: Tuple[str, ...]) -> Iterable[str]:
    """Yield diagram texts from arguments, or from stdin (one per line) for none or ``-``."""
    if texts and texts != ("-",):
        yield from texts
        return
    for line in click.get_text_stream("stdin"):
        if line.strip():
            yield line.strip()


@click.group(cls=ReportGroup)
@click.version_option(version=VERSION)
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default="WARNING",
    show_default=True,
    help="Logging level; log lines go to stderr.",
)
@click.option("--progress", is_flag=True, help="Show progress bars on stderr.")
@click.option("--human", is_flag=True, help="Render results as a table instead of JSON lines.")
@click.pass_context
def main(ctx: click.Context, log_level: str, progress: bool, human: bool):
    """CLI for pyChordweights."""
    logging.basicConfig(
        level=log_level.upper(),
        stream=sys.stderr,
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
    )
    ctx.obj = {"progress": progress, "human": human}


@main.command()
@click.argument("diagrams", nargs=-1)
@click.option("--debug", is_flag=True, help="Add the corrected and uncorrected deframed T values.")
def invariants(diagrams: Tuple[str, ...], debug: bool):
    """Print the invariants of each diagram, e.g. ``invariants "1 2 1 2"``."""
    records = [invariants_report(parse_diagram(text), debug=debug) for text in _read_diagrams(diagrams)]
    _emit(records)


@main.command(name="enumerate")
@click.option("-n", "degree", type=int, required=True, help="Degree.")
@click.option("--marked", is_flag=True, help="Enumerate every marking too.")
def enumerate_command(degree: int, marked: bool):
    """List the canonical diagrams of a degree."""
    check_degree_cap(degree, MAX_MARKED_DEGREE if marked else MAX_UNMARKED_DEGREE, "enumerate")
    _emit([{"degree": degree, "diagram": str(d)} for d in enumerate_diagrams(degree, marked)])


@main.command()
@click.argument("diagram")
@click.option("--trace", is_flag=True, help="Print the traversal cycles.")
def surgery(diagram: str, trace: bool):
    """Count the circles left by band surgery on every chord."""
    parsed = parse_diagram(diagram)
    result = surgery_trace(parsed)
    record: Dict[str, object] = {"diagram": str(parsed), "components": result.components}
    if trace:
        record["cycles"] = result.to_dict()["cycles"]
    _emit([record])


@main.command()
@click.argument("diagram")
def caravan(diagram: str):
    """Reduce a (marked) diagram to its marked caravan."""
    parsed = parse_diagram(diagram)
    normal_form = caravan_normal_form(parsed)
    _emit(
        [
            {
                "diagram": str(parsed),
                "caravan": list(normal_form.as_tuple()),
                "realization": str(caravan_diagram(*normal_form.as_tuple())),
            }
        ]
    )


@main.command()
@click.argument("diagram")
def graph(diagram: str):
    """Print the marked intersection graph as an edge list."""
    parsed = parse_diagram(diagram)
    _emit([{"diagram": str(parsed), **intersection_graph(parsed).to_dict()}])


@main.command()
@click.option("--kind", type=click.Choice(sorted(CLI_KINDS)), required=True, help="Relation kind.")
@click.option("--weights", required=True, help="Comma-separated functional names.")
@click.option("-n", "degree", type=int, required=True, help="Degree.")
def check(kind: str, weights: str, degree: int):
    """Evaluate functionals on every generated relation."""
    relation_kind = CLI_KINDS[kind]
    functionals = parse_functionals(weights)
    if relation_kind in MARKED_KINDS:
        unsupported = [f.name for f in functionals if not f.supports_marked]
        if unsupported:
            raise click.BadParameter(f"{unsupported} are not defined on marked diagrams", param_hint="--weights")
    reports = [check_vanishing(f, degree, relation_kind, progress=_progress()) for f in functionals]
    _emit(reports)
    if any(report["failures"] for report in reports):
        return EXIT_CHECK_FAILED
    return EXIT_OK


@main.command(name="quotient-dim")
@click.option("-n", "degree", type=int, required=True, help="Degree.")
@click.option("--space", type=click.Choice(sorted(CLI_SPACES)), required=True, help="Quotient space.")
@click.option("--classes", is_flag=True, help="Add the class of every diagram in the quotient basis.")
def quotient_dim(degree: int, space: str, classes: bool):
    """Compute the exact dimension of a diagram space modulo its relations."""
    analysis = span_analysis(degree, CLI_SPACES[space], progress=_progress())
    _emit([analysis.to_dict(with_classes=classes)])


@main.command()
@click.option(
    "--criterion",
    "criteria",
    type=click.IntRange(min(CRITERIA), max(CRITERIA)),
    multiple=True,
    help="Run only these criteria (repeatable).",
)
def selftest(criteria: Tuple[int, ...]):
    """Run the acceptance suite."""
    results = run_acceptance(criteria or None, progress=_progress())
    _emit([result.to_dict() for result in results])
    if not all(result.passed for result in results):
        return EXIT_CHECK_FAILED
    return EXIT_OK


if __name__ == "__main__":
    main()
