# coding: utf-8

"""Registry of named functionals on (marked) chord diagrams used by the relation checks and the CLI."""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

from pyChordweights.chord.diagram import MarkedChordDiagram
from pyChordweights.constants import (
    COMPONENTS,
    CONWAY,
    HOMFLY,
    HOMFLY_DEFRAMED,
    KAUFFMAN,
    KAUFFMAN_DEFRAMED,
    NULLITY,
    NULLITY_MARKED,
    RANK,
    RANK_DEFRAMED,
    S_DEFRAMED,
    S_POLY,
    T_DEFRAMED,
    T_DEFRAMED_DISPLAYED,
    T_POLY,
)
from pyChordweights.graph.intersection import intersection_graph
from pyChordweights.surgery import boundary_components
from pyChordweights.utils import PreconditionError, UnknownFunctionalError
from pyChordweights.weights import systems
from pyChordweights.weights.systems import Weight

logger = logging.getLogger(__name__)

__all__ = [
    "Functional",
    "FUNCTIONALS",
    "get_functional",
    "parse_functionals",
]


@dataclass(frozen=True)
class Functional:
    """A named functional with an evaluator on unmarked diagrams and, optionally, on marked ones.

    :param name: registry identifier
    :param evaluate: value on an unmarked diagram
    :param evaluate_marked: value on any (marked) diagram, or None when undefined there
    """

    name: str
    evaluate: Callable[[MarkedChordDiagram], Weight]
    evaluate_marked: Optional[Callable[[MarkedChordDiagram], Weight]] = None

    def __call__(self, diagram: MarkedChordDiagram) -> Weight:
        """Evaluate on a diagram, using the marked evaluator for marked input.

        :raises PreconditionError: if the diagram is marked and no marked evaluator exists
        """
        if not diagram.is_marked():
            return self.evaluate(diagram)
        if self.evaluate_marked is None:
            raise PreconditionError(f"functional {self.name!r} is not defined on marked diagrams")
        return self.evaluate_marked(diagram)

    def marked_value(self, diagram: MarkedChordDiagram) -> Weight:
        """Evaluate with the marked evaluator, also on diagrams that happen to carry no marks.

        This is the value on the space of marked diagrams, where an unmarked diagram is one with every
        chord unmarked (``K^m`` rather than ``K``).

        :raises PreconditionError: if no marked evaluator exists
        """
        if self.evaluate_marked is None:
            raise PreconditionError(f"functional {self.name!r} is not defined on marked diagrams")
        return self.evaluate_marked(diagram)

    @property
    def supports_marked(self) -> bool:
        """Check whether a marked evaluator exists."""
        return self.evaluate_marked is not None


def _graph(func):
    return lambda diagram: func(intersection_graph(diagram))


def _marked_conway(diagram: MarkedChordDiagram) -> int:
    return systems.graph_det(intersection_graph(diagram))


FUNCTIONALS: Dict[str, Functional] = {
    f.name: f
    for f in (
        Functional(CONWAY, systems.conway, _marked_conway),
        Functional(HOMFLY, systems.homfly),
        Functional(HOMFLY_DEFRAMED, systems.homfly_deframed),
        Functional(KAUFFMAN, systems.kauffman, systems.kauffman_marked),
        Functional(KAUFFMAN_DEFRAMED, systems.kauffman_deframed),
        Functional(RANK, _graph(systems.rank_poly), _graph(systems.rank_poly)),
        Functional(RANK_DEFRAMED, _graph(systems.rank_poly_deframed)),
        Functional(S_POLY, _graph(systems.s_poly)),
        Functional(S_DEFRAMED, _graph(systems.s_poly_deframed)),
        Functional(T_POLY, _graph(systems.t_poly)),
        Functional(T_DEFRAMED, _graph(systems.t_poly_deframed)),
        Functional(T_DEFRAMED_DISPLAYED, _graph(systems.t_poly_deframed_displayed)),
        Functional(NULLITY, _graph(systems.nullity_poly), _graph(systems.nullity_poly)),
        Functional(NULLITY_MARKED, _graph(lambda g: systems.nullity_poly(g, True))),
        Functional(COMPONENTS, boundary_components, boundary_components),
    )
}


def get_functional(name: str) -> Functional:
    """Look up a functional by name.

    :param name: e.g. ``"kauffman"``
    :returns: the registered functional
    :raises UnknownFunctionalError: for an unknown name
    """
    try:
        return FUNCTIONALS[name]
    except KeyError:
        raise UnknownFunctionalError(f"unknown functional {name!r}; choose from {sorted(FUNCTIONALS)}") from None


def parse_functionals(text: str) -> List[Functional]:
    """Parse a comma-separated list of functional names.

    :param text: e.g. ``"conway,homfly,kauffman"``
    :returns: the functionals, in the given order
    :raises UnknownFunctionalError: if any name is unknown or the list is empty
    """
    names = [name.strip() for name in text.split(",") if name.strip()]
    if not names:
        raise UnknownFunctionalError("no functional named")
    return [get_functional(name) for name in names]
