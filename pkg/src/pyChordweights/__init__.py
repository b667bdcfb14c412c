# -*- coding: utf-8 -*-

"""Weight systems on (marked) chord diagrams: Conway, HOMFLYPT and Kauffman, with surgery oracles."""

from .chord.diagram import MarkedChordDiagram, parse_diagram  # noqa
from .weights.systems import conway, homfly, invariants_report, kauffman  # noqa
