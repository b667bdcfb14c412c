# coding: utf-8

"""Exact Laurent polynomials in the weight-system variables ``a`` and ``b``.

Graph polynomials in ``x`` are stored with ``x`` as ``b`` and printed with the name ``x``.
"""

import logging
from functools import cached_property
from typing import Dict, List, Tuple, Union

import sympy as sp

from pyChordweights.constants import SYMBOL_A, SYMBOL_B

logger = logging.getLogger(__name__)

__all__ = [
    "A",
    "B",
    "BivariatePolynomial",
]

A = sp.Symbol(SYMBOL_A)
B = sp.Symbol(SYMBOL_B)

Scalar = Union[int, "BivariatePolynomial"]


class BivariatePolynomial:
    """An integer Laurent polynomial in ``a`` and ``b`` backed by an expanded sympy expression.

    Two polynomials are equal exactly when their term maps ``(exp_a, exp_b) -> coefficient`` are equal.
    """

    def __init__(self, expr=0):
        self.expr = sp.expand(sp.sympify(expr))
        if not self.expr.free_symbols <= {A, B}:
            raise ValueError(f"unexpected symbols {self.expr.free_symbols - {A, B}} in {self.expr}")

    @classmethod
    def constant(cls, value: int) -> "BivariatePolynomial":
        """Build a constant polynomial."""
        return cls(sp.Integer(value))

    @classmethod
    def monomial(cls, exp_a: int = 0, exp_b: int = 0, coefficient: int = 1) -> "BivariatePolynomial":
        """Build ``coefficient * a^exp_a * b^exp_b``."""
        return cls(coefficient * A**exp_a * B**exp_b)

    @cached_property
    def terms(self) -> Dict[Tuple[int, int], int]:
        """Get the map ``(exp_a, exp_b) -> coefficient`` with no zero coefficients."""
        found: Dict[Tuple[int, int], int] = {}
        if self.expr.is_zero:
            return found
        for monomial, coefficient in self.expr.as_coefficients_dict().items():
            powers = monomial.as_powers_dict()
            key = (int(powers.get(A, 0)), int(powers.get(B, 0)))
            value = int(coefficient)
            if value:
                found[key] = found.get(key, 0) + value
        return {key: value for key, value in found.items() if value}

    def is_zero(self) -> bool:
        """Check whether every coefficient vanishes."""
        return not self.terms

    def has_negative_exponent(self) -> bool:
        """Check whether a term carries a negative power of ``a`` or ``b``."""
        return any(exp_a < 0 or exp_b < 0 for exp_a, exp_b in self.terms)

    def at_inverse_b(self) -> "BivariatePolynomial":
        """Substitute ``b -> b^-1``."""
        return BivariatePolynomial(self.expr.subs(B, 1 / B))

    def _coerce(self, other) -> "BivariatePolynomial":
        if isinstance(other, BivariatePolynomial):
            return other
        if isinstance(other, int):
            return BivariatePolynomial.constant(other)
        return NotImplemented

    def __add__(self, other: Scalar) -> "BivariatePolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return BivariatePolynomial(self.expr + other.expr)

    __radd__ = __add__

    def __neg__(self) -> "BivariatePolynomial":
        return BivariatePolynomial(-self.expr)

    def __sub__(self, other: Scalar) -> "BivariatePolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return BivariatePolynomial(self.expr - other.expr)

    def __rsub__(self, other: Scalar) -> "BivariatePolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return BivariatePolynomial(other.expr - self.expr)

    def __mul__(self, other: Scalar) -> "BivariatePolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return BivariatePolynomial(self.expr * other.expr)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "BivariatePolynomial":
        return BivariatePolynomial(self.expr**exponent)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = BivariatePolynomial.constant(other)
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self) -> List[Tuple[Tuple[int, int], int]]:
        """Get the terms ordered by ``exp_a`` then ``exp_b``, both descending."""
        return sorted(self.terms.items(), key=lambda item: (-item[0][0], -item[0][1]))

    def format(self, b_name: str = SYMBOL_B) -> str:
        """Render the canonical string, e.g. ``a^2*b - a^2``.

        :param b_name: the name printed for ``b`` (``x`` for graph polynomials)
        :returns: terms sorted by ``exp_a`` then ``exp_b`` descending, coefficients of 1 elided
        """
        parts = []
        for (exp_a, exp_b), coefficient in self.sorted_terms():
            factors = []
            for name, exponent in ((SYMBOL_A, exp_a), (b_name, exp_b)):
                if exponent == 1:
                    factors.append(name)
                elif exponent:
                    factors.append(f"{name}^{exponent}")
            magnitude = abs(coefficient)
            if magnitude != 1 or not factors:
                factors.insert(0, str(magnitude))
            body = "*".join(factors)
            if not parts:
                parts.append(f"-{body}" if coefficient < 0 else body)
            else:
                parts.append(f"- {body}" if coefficient < 0 else f"+ {body}")
        return " ".join(parts) if parts else "0"

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"BivariatePolynomial({self.format()!r})"
