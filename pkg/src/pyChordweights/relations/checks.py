# coding: utf-8

"""Python module to check functionals against generated relations and reduce diagrams to caravans."""

import logging
from typing import Callable, Dict, List, Tuple, Union

from tqdm import tqdm

from pyChordweights.chord.combination import FormalCombination
from pyChordweights.chord.diagram import MarkedChordDiagram
from pyChordweights.constants import MARKED_KINDS
from pyChordweights.gf2 import CaravanClass, adjacency_matrix, congruence_normal_form
from pyChordweights.graph.intersection import intersection_graph
from pyChordweights.relations.moves import generate_relations
from pyChordweights.utils import PreconditionError, get_worker_count, ordered_map
from pyChordweights.weights.functionals import Functional, get_functional
from pyChordweights.weights.systems import Weight

logger = logging.getLogger(__name__)

__all__ = [
    "check_vanishing",
    "caravan_normal_form",
]

# failing combinations listed in a report
MAX_LISTED_FAILURES = 10


def caravan_normal_form(diagram: MarkedChordDiagram) -> CaravanClass:
    """Get the marked caravan a diagram reduces to under the extended 2-term relations.

    :param diagram: a (marked) diagram
    :returns: the congruence class of its marked adjacency form; ``(0, k - rank, rank / 2)`` when unmarked
    """
    return congruence_normal_form(adjacency_matrix(intersection_graph(diagram)))


def _evaluator(functional: Functional, kind: str) -> Callable[[MarkedChordDiagram], Weight]:
    """Pick the evaluator for a relation kind; marked kinds use the marked evaluator on every term."""
    if kind in MARKED_KINDS:
        if not functional.supports_marked:
            raise PreconditionError(f"functional {functional.name!r} is not defined on marked diagrams")
        return functional.marked_value
    return functional


def _value_on(task: Tuple[str, str, FormalCombination]):
    name, kind, combination = task
    return combination.evaluate(_evaluator(get_functional(name), kind))


def check_vanishing(
    functional: Union[str, Functional],
    n: int,
    kind: str,
    workers: int = 0,
    progress: bool = False,
) -> Dict[str, object]:
    """Evaluate a functional on every relation of a kind in degree n.

    Terms of the extended 2-term relations are all valued on the space of marked diagrams, also the unmarked
    ones.

    :param functional: a registered name or a :class:`Functional`
    :param n: the degree
    :param kind: the relation kind
    :param workers: worker processes; 0 reads the environment override
    :param progress: show a progress bar
    :returns: a report with the relation ``total``, the ``failures`` count and the first failing relations
    :raises UnknownFunctionalError: for an unknown functional name
    :raises DegreeCapError: above the degree cap for the kind
    :raises PreconditionError: for a marked relation kind and a functional with no marked evaluator
    """
    if isinstance(functional, str):
        functional = get_functional(functional)
    relations = list(
        tqdm(generate_relations(n, kind), desc=f"{kind} n={n}", disable=not progress, leave=False)
    )
    workers = workers or get_worker_count()
    if workers > 1:
        tasks = [(functional.name, kind, r) for r in relations]
        values = ordered_map(_value_on, tasks, workers=workers)
    else:
        evaluator = _evaluator(functional, kind)
        values = [r.evaluate(evaluator) for r in relations]

    failing: List[str] = [repr(r) for r, value in zip(relations, values) if value != 0]
    if failing:
        logger.warning(
            "%s fails %d of %d %s relations in degree %d",
            functional.name,
            len(failing),
            len(relations),
            kind,
            n,
        )
    return {
        "functional": functional.name,
        "kind": kind,
        "degree": n,
        "total": len(relations),
        "failures": len(failing),
        "failing": failing[:MAX_LISTED_FAILURES],
    }
