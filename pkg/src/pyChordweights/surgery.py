# coding: utf-8

"""Python module to count the circles left after band surgery on every chord of a diagram.

Unmarked chords are replaced by untwisted bands and marked chords by half-twisted bands.
"""

import logging
from dataclasses import dataclass
from typing import List, Set, Tuple

from pyChordweights.chord.diagram import MarkedChordDiagram

logger = logging.getLogger(__name__)

__all__ = [
    "ArcState",
    "SurgeryTrace",
    "surgery_trace",
    "boundary_components",
]

# (arc index, True for forward); arc j runs from endpoint j to endpoint j + 1 (mod 2k)
ArcState = Tuple[int, bool]


@dataclass(frozen=True)
class SurgeryTrace:
    """The traversal cycles of a surgered diagram.

    :param components: number of circles after surgery
    :param cycles: one tuple of arc states per circle, each arc used exactly once
    """

    components: int
    cycles: Tuple[Tuple[ArcState, ...], ...]

    def to_dict(self) -> dict:
        """Get a JSON-ready view of the trace."""
        return {
            "components": self.components,
            "cycles": [[[arc, "fwd" if forward else "rev"] for arc, forward in cycle] for cycle in self.cycles],
        }


def _next_state(diagram: MarkedChordDiagram, partner: Tuple[int, ...], state: ArcState) -> ArcState:
    """Follow an arc into its endpoint, cross the band and leave on the next arc."""
    arc, forward = state
    size = len(diagram.word)
    endpoint = (arc + 1) % size if forward else arc
    other = partner[endpoint]
    twisted = diagram.word[endpoint] in diagram.marks
    # untwisted bands keep the direction, half-twisted bands reverse it
    leaves_forward = forward != twisted
    if leaves_forward:
        return (other, True)
    return ((other - 1) % size, False)


def surgery_trace(diagram: MarkedChordDiagram) -> SurgeryTrace:
    """Trace the boundary circles left by band surgery on every chord.

    :param diagram: a diagram, possibly marked; degree 0 is allowed
    :returns: the traversal cycles
    :raises AssertionError: if an arc would be traversed twice
    """
    size = len(diagram.word)
    if size == 0:
        return SurgeryTrace(1, (((0, True),),))

    partner = diagram.partner
    visited: Set[int] = set()
    cycles: List[Tuple[ArcState, ...]] = []
    for start in range(size):
        if start in visited:
            continue
        state: ArcState = (start, True)
        cycle = []
        while True:
            arc, _ = state
            assert arc not in visited, f"arc {arc} of {diagram} traversed twice"
            visited.add(arc)
            cycle.append(state)
            state = _next_state(diagram, partner, state)
            if state == cycle[0]:
                break
        cycles.append(tuple(cycle))

    assert len(visited) == size, f"arcs {sorted(set(range(size)) - visited)} of {diagram} never traversed"
    logger.debug("surgery on %s leaves %d circles", diagram, len(cycles))
    return SurgeryTrace(len(cycles), tuple(cycles))


def boundary_components(diagram: MarkedChordDiagram) -> int:
    """Count the circles left by band surgery on every chord.

    :param diagram: a diagram, possibly marked
    :returns: the component count c, 1 for the empty diagram
    """
    return surgery_trace(diagram).components
