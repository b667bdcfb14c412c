# coding: utf-8

"""Python utils file for global functions."""

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from itertools import chain, combinations
from typing import Callable, FrozenSet, Iterable, Iterator, List, Sequence, TypeVar

from pyChordweights.constants import WORKERS_ENV_VAR

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


class MalformedDiagramError(ValueError):
    """Raised when a diagram word cannot be parsed."""


class PreconditionError(ValueError):
    """Raised when an operation is called outside its domain."""


class DegreeCapError(ValueError):
    """Raised when a computation is requested above the configured degree cap."""


class UnknownFunctionalError(ValueError):
    """Raised for an unknown weight-system or functional identifier."""


def subsets(items: Iterable[T]) -> Iterator[FrozenSet[T]]:
    """Iterate over all subsets of a finite collection, smallest first.

    :param items: the ground set
    :returns: an iterator of frozensets, 2^n of them
    """
    pool = list(items)
    return (
        frozenset(subset)
        for subset in chain.from_iterable(combinations(pool, r) for r in range(len(pool) + 1))
    )


def check_degree_cap(n: int, cap: int, what: str) -> None:
    """Reject a degree above the configured cap.

    :param n: requested degree
    :param cap: the configured cap
    :param what: name of the computation, used in the error message
    :raises DegreeCapError: if ``n`` exceeds ``cap`` or is negative
    """
    if n < 0:
        raise DegreeCapError(f"{what}: degree must be non-negative, got {n}")
    if n > cap:
        logger.warning("%s requested at degree %d above the cap %d", what, n, cap)
        raise DegreeCapError(f"{what}: degree {n} exceeds the cap of {cap}")


def get_worker_count() -> int:
    """Get the worker count from the environment.

    :returns: the number of worker processes, at least 1
    """
    raw = os.environ.get(WORKERS_ENV_VAR, "1")
    try:
        workers = int(raw)
    except ValueError:
        logger.warning("Ignoring non-integer %s=%r", WORKERS_ENV_VAR, raw)
        return 1
    return max(workers, 1)


def ordered_map(func: Callable[[T], R], items: Sequence[T], workers: int = 1) -> List[R]:
    """Map a picklable function over items, preserving input order.

    :param func: a module-level function
    :param items: the work items
    :param workers: number of worker processes; 1 runs in-process
    :returns: results in the order of ``items``
    """
    if workers <= 1 or len(items) < 2:
        return [func(item) for item in items]

    chunksize = max(len(items) // (workers * 4), 1)
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, items, chunksize=chunksize))
