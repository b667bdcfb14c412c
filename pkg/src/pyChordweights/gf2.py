# coding: utf-8

"""Python module for symmetric bilinear forms over Z_2 stored as int bitsets."""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from pyChordweights.graph.intersection import MarkedGraph
from pyChordweights.utils import PreconditionError

logger = logging.getLogger(__name__)

__all__ = [
    "Gf2SymmetricMatrix",
    "CaravanClass",
    "adjacency_matrix",
    "gf2_rank",
    "gf2_det",
    "gf2_nullity",
    "is_alternating",
    "symmetric_transvection",
    "direct_sum",
    "congruence_blocks",
    "congruence_normal_form",
]


@dataclass(frozen=True)
class Gf2SymmetricMatrix:
    """A symmetric n x n matrix over Z_2.

    Row ``i`` is an int whose bit ``j`` holds entry ``(i, j)``.
    """

    n: int
    rows: Tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise PreconditionError(f"expected {self.n} rows, got {len(self.rows)}")
        limit = 1 << self.n
        for i, row in enumerate(self.rows):
            if not 0 <= row < limit:
                raise PreconditionError(f"row {i} has bits outside 0..{self.n - 1}")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if self.entry(i, j) != self.entry(j, i):
                    raise PreconditionError(f"matrix is not symmetric at ({i}, {j})")

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]]) -> "Gf2SymmetricMatrix":
        """Build a matrix from nested 0/1 lists."""
        rows = tuple(sum((bit & 1) << j for j, bit in enumerate(row)) for row in entries)
        return cls(len(rows), rows)

    def entry(self, i: int, j: int) -> int:
        """Get entry ``(i, j)``."""
        return (self.rows[i] >> j) & 1

    def diagonal(self) -> List[int]:
        """Get the diagonal bits."""
        return [self.entry(i, i) for i in range(self.n)]

    def to_lists(self) -> List[List[int]]:
        """Get the matrix as nested 0/1 lists."""
        return [[self.entry(i, j) for j in range(self.n)] for i in range(self.n)]


@dataclass(frozen=True)
class CaravanClass:
    """Block counts of a marked caravan.

    :param marked_ones: marked one-humped camels, ``[1]`` blocks
    :param unmarked_ones: unmarked one-humped camels, ``[0]`` blocks
    :param crossings: unmarked two-humped camels, hyperbolic blocks
    """

    marked_ones: int
    unmarked_ones: int
    crossings: int

    @property
    def degree(self) -> int:
        """Get the degree of the caravan."""
        return self.marked_ones + self.unmarked_ones + 2 * self.crossings

    @property
    def rank(self) -> int:
        """Get the rank of the caravan's adjacency form."""
        return self.marked_ones + 2 * self.crossings

    def as_tuple(self) -> Tuple[int, int, int]:
        """Get ``(n1, n2, n3)``."""
        return (self.marked_ones, self.unmarked_ones, self.crossings)


def adjacency_matrix(graph: MarkedGraph) -> Gf2SymmetricMatrix:
    """Build the adjacency matrix of a marked graph.

    Off-diagonal entries mark edges; the diagonal entry of a vertex is 1 exactly when it is marked.

    :param graph: a marked graph
    :returns: the adjacency form
    """
    rows = [0] * graph.n
    for u, v in graph.edges:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    for m in graph.marks:
        rows[m] |= 1 << m
    return Gf2SymmetricMatrix(graph.n, tuple(rows))


def gf2_rank(matrix: Gf2SymmetricMatrix) -> int:
    """Compute the rank over Z_2 by Gaussian elimination on the bit rows.

    :param matrix: a symmetric matrix
    :returns: the rank, 0 for the empty matrix
    """
    pivots: List[int] = []
    for row in matrix.rows:
        for pivot in pivots:
            row = min(row, row ^ pivot)
        if row:
            pivots.append(row)
    return len(pivots)


def gf2_det(matrix: Gf2SymmetricMatrix) -> int:
    """Compute the determinant over Z_2.

    :param matrix: a symmetric matrix
    :returns: 1 if the matrix has full rank, else 0; the empty matrix has determinant 1
    """
    return int(gf2_rank(matrix) == matrix.n)


def gf2_nullity(matrix: Gf2SymmetricMatrix) -> int:
    """Compute the nullity ``n - rank``."""
    return matrix.n - gf2_rank(matrix)


def is_alternating(matrix: Gf2SymmetricMatrix) -> bool:
    """Check whether the form is alternating.

    Over Z_2 the map x -> B(x, x) is linear with coefficients on the diagonal, so the form is
    alternating exactly when its diagonal vanishes.
    """
    return not any(matrix.diagonal())


def _transvect(rows: List[int], a: int, b: int) -> None:
    """Add row and column b to row and column a, in place."""
    rows[a] ^= rows[b]
    bit_a, bit_b = 1 << a, 1 << b
    for i, row in enumerate(rows):
        if row & bit_b:
            rows[i] = row ^ bit_a


def symmetric_transvection(matrix: Gf2SymmetricMatrix, a: int, b: int) -> Gf2SymmetricMatrix:
    """Add row b to row a and column b to column a over Z_2.

    The result is congruent to the input, so rank and determinant are unchanged.

    :param matrix: a symmetric matrix
    :param a: target index (0-based)
    :param b: source index (0-based)
    :returns: the transvected matrix
    :raises PreconditionError: if ``a == b`` or an index is out of range
    """
    if a == b:
        raise PreconditionError(f"transvection needs two different indices, got {a} twice")
    if not (0 <= a < matrix.n and 0 <= b < matrix.n):
        raise PreconditionError(f"indices {a}, {b} are not in 0..{matrix.n - 1}")
    rows = list(matrix.rows)
    _transvect(rows, a, b)
    return Gf2SymmetricMatrix(matrix.n, tuple(rows))


def direct_sum(first: Gf2SymmetricMatrix, second: Gf2SymmetricMatrix) -> Gf2SymmetricMatrix:
    """Build the block-diagonal sum of two forms."""
    shift = first.n
    return Gf2SymmetricMatrix(first.n + second.n, first.rows + tuple(row << shift for row in second.rows))


def congruence_blocks(matrix: Gf2SymmetricMatrix) -> Tuple[int, int, int]:
    """Reduce a form by congruences to ``[1]`` blocks, hyperbolic blocks and zeros.

    A vertex with a diagonal 1 splits off a ``[1]`` block; otherwise an off-diagonal 1 splits off a
    hyperbolic block; what remains is the radical.

    :param matrix: a symmetric matrix
    :returns: ``(ones, hyperbolic, zeros)`` with ``ones + 2 * hyperbolic + zeros == n``
    """
    rows = list(matrix.rows)
    active = set(range(matrix.n))
    ones = hyperbolic = 0
    while active:
        pivot = next((i for i in sorted(active) if (rows[i] >> i) & 1), None)
        if pivot is not None:
            for j in sorted(active - {pivot}):
                if (rows[j] >> pivot) & 1:
                    _transvect(rows, j, pivot)
            active.discard(pivot)
            ones += 1
            continue
        pair = next(
            ((i, j) for i in sorted(active) for j in sorted(active) if i < j and (rows[i] >> j) & 1),
            None,
        )
        if pair is None:
            break
        i, j = pair
        for k in sorted(active - {i, j}):
            clear_i, clear_j = (rows[k] >> i) & 1, (rows[k] >> j) & 1
            # B(k, i) is cleared by adding j, B(k, j) by adding i
            if clear_j:
                _transvect(rows, k, i)
            if clear_i:
                _transvect(rows, k, j)
        active -= {i, j}
        hyperbolic += 1
    return ones, hyperbolic, len(active)


def congruence_normal_form(matrix: Gf2SymmetricMatrix) -> CaravanClass:
    """Classify a form as a marked caravan.

    Non-alternating forms of rank r give ``(r, n - r, 0)``; alternating forms give ``(0, n - r, r / 2)``.
    Over Z_2, ``[1] + H`` is congruent to ``[1]^3``, so non-alternating forms use ``[1]`` blocks only.

    :param matrix: a symmetric matrix of dimension k
    :returns: the caravan class
    """
    ones, hyperbolic, zeros = congruence_blocks(matrix)
    rank = ones + 2 * hyperbolic
    if ones:
        return CaravanClass(rank, zeros, 0)
    return CaravanClass(0, zeros, hyperbolic)
