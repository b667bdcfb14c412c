# coding: utf-8

"""Integer-weighted formal sums of diagrams, graphs, or tensor pairs of them."""

import logging
from collections import defaultdict
from typing import Any, Callable, Dict, Hashable, Iterable, Iterator, Tuple

logger = logging.getLogger(__name__)

__all__ = [
    "FormalCombination",
    "canonical_key",
]


def canonical_key(obj: Any) -> Hashable:
    """Get the canonical representative used to merge terms.

    Tensor terms are tuples and are canonicalized componentwise; every other object must expose a
    ``canonical()`` method.

    :param obj: a diagram, a graph, or a tuple of them
    :returns: the canonical representative
    """
    if isinstance(obj, tuple):
        return tuple(canonical_key(part) for part in obj)
    return obj.canonical()


def _sort_key(obj: Any):
    if isinstance(obj, tuple):
        return tuple(_sort_key(part) for part in obj)
    return obj.sort_key()


class FormalCombination:
    """A finite formal sum with integer coefficients.

    Keys are canonical objects; identical keys are merged on construction and zero coefficients are
    never stored, so two combinations are equal exactly when their term maps are.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[Tuple[Any, int]] = ()):
        merged: Dict[Hashable, int] = defaultdict(int)
        for obj, coefficient in terms:
            merged[canonical_key(obj)] += coefficient
        self._terms = {key: value for key, value in merged.items() if value != 0}

    @classmethod
    def single(cls, obj: Any, coefficient: int = 1) -> "FormalCombination":
        """Build a one-term combination.

        :param obj: the term
        :param coefficient: its coefficient
        :returns: the combination ``coefficient * obj``
        """
        return cls([(obj, coefficient)])

    def __iter__(self) -> Iterator[Tuple[Any, int]]:
        return iter(self.items())

    def items(self):
        """Get the terms in deterministic order.

        :returns: a list of ``(object, coefficient)`` pairs sorted by the objects' sort keys
        """
        return sorted(self._terms.items(), key=lambda item: _sort_key(item[0]))

    def keys(self):
        """Get the canonical objects carrying a non-zero coefficient, in deterministic order."""
        return [obj for obj, _ in self.items()]

    def values(self):
        """Get the coefficients in deterministic order."""
        return [coefficient for _, coefficient in self.items()]

    def coefficient(self, obj: Any) -> int:
        """Get the coefficient of an object (0 if absent).

        :param obj: a diagram, graph, or tensor pair; it is canonicalized first
        :returns: its coefficient
        """
        return self._terms.get(canonical_key(obj), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        """Check whether every coefficient cancelled."""
        return not self._terms

    def total_weight(self) -> int:
        """Get the sum of all coefficients."""
        return sum(self._terms.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FormalCombination):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other: "FormalCombination") -> "FormalCombination":
        return FormalCombination(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> "FormalCombination":
        return FormalCombination((obj, -c) for obj, c in self._terms.items())

    def __sub__(self, other: "FormalCombination") -> "FormalCombination":
        return self + (-other)

    def __rmul__(self, scalar: int) -> "FormalCombination":
        return FormalCombination((obj, scalar * c) for obj, c in self._terms.items())

    def map_terms(self, func: Callable[[Any], Any]) -> "FormalCombination":
        """Apply a function to every term and extend linearly.

        :param func: maps an object to an object or to a :class:`FormalCombination`
        :returns: the image combination
        """
        result = []
        for obj, coefficient in self._terms.items():
            image = func(obj)
            if isinstance(image, FormalCombination):
                result.extend((key, coefficient * c) for key, c in image._terms.items())
            else:
                result.append((image, coefficient))
        return FormalCombination(result)

    def filter(self, predicate: Callable[[Any], bool]) -> "FormalCombination":
        """Keep the terms whose object satisfies a predicate."""
        return FormalCombination((obj, c) for obj, c in self._terms.items() if predicate(obj))

    def product(self, other: "FormalCombination", op: Callable[[Any, Any], Any]) -> "FormalCombination":
        """Multiply two combinations bilinearly.

        :param other: the right factor
        :param op: the product of two terms
        :returns: the sum over term pairs of ``c1 * c2 * op(x, y)``
        """
        return FormalCombination(
            (op(x, y), cx * cy) for x, cx in self._terms.items() for y, cy in other._terms.items()
        )

    def evaluate(self, functional: Callable[[Any], Any], zero: Any = 0) -> Any:
        """Apply a functional to every term and sum with coefficients.

        :param functional: maps an object to an int or polynomial
        :param zero: the additive identity of the value ring
        :returns: the linear extension evaluated on this combination
        """
        total = zero
        for obj, coefficient in self.items():
            total = total + coefficient * functional(obj)
        return total

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for obj, coefficient in self.items():
            label = " (x) ".join(map(str, obj)) if isinstance(obj, tuple) else str(obj)
            parts.append(f"{coefficient:+d}*[{label}]")
        return " ".join(parts)
