"""
Truncated WKB total symbols

A WkbSymbol is Σ_{j=floor}^{m} p_j(x,u) τ^j. Coefficients at orders >= floor
are exact; everything below the floor is unknown. Products propagate the
floor so that reported coefficients are never contaminated by the unknown
tail.
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import factorial
from types import MappingProxyType

from wkb_engine.errors import DimensionMismatchError
from wkb_engine.polycore import MultiPoly, multi_derivative
from wkb_engine.polycore.rational import RationalLike, to_rational


class WkbSymbol:
    """
    Immutable truncated total symbol with a reliability floor.

    Attributes:
        dim: Number of position variables
        floor: Lowest reliable τ-order
    """

    __slots__ = ("dim", "floor", "_terms")

    def __init__(self, dim: int, floor: int, terms: Mapping[int, MultiPoly] | None = None):
        self.dim = dim
        self.floor = floor
        cleaned: dict[int, MultiPoly] = {}
        for order, coefficient in (terms or {}).items():
            if coefficient.dim != dim:
                raise DimensionMismatchError(coefficient.dim, dim, "symbol and coefficient")
            if order >= floor and not coefficient.is_zero():
                cleaned[order] = coefficient
        self._terms = cleaned

    # Constructors

    @classmethod
    def zero(cls, dim: int, floor: int) -> WkbSymbol:
        return cls(dim, floor)

    @classmethod
    def scalar(cls, dim: int, value: RationalLike, floor: int) -> WkbSymbol:
        return cls(dim, floor, {0: MultiPoly.constant(dim, value)})

    @classmethod
    def one(cls, dim: int, floor: int) -> WkbSymbol:
        return cls.scalar(dim, 1, floor)

    @classmethod
    def tau_power(cls, dim: int, order: int, floor: int) -> WkbSymbol:
        return cls(dim, floor, {order: MultiPoly.one(dim)})

    @classmethod
    def from_poly(cls, poly: MultiPoly, floor: int, order: int = 0) -> WkbSymbol:
        return cls(poly.dim, floor, {order: poly})

    @classmethod
    def x(cls, dim: int, index: int, floor: int) -> WkbSymbol:
        return cls.from_poly(MultiPoly.x(dim, index), floor)

    @classmethod
    def u(cls, dim: int, index: int, floor: int) -> WkbSymbol:
        return cls.from_poly(MultiPoly.u(dim, index), floor)

    # Inspection

    @property
    def terms(self) -> Mapping[int, MultiPoly]:
        return MappingProxyType(self._terms)

    def items(self) -> Iterator[tuple[int, MultiPoly]]:
        """Terms by descending τ-order."""
        for order in sorted(self._terms, reverse=True):
            yield order, self._terms[order]

    def coefficient(self, order: int) -> MultiPoly:
        return self._terms.get(order, MultiPoly.zero(self.dim))

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def order(self) -> int | None:
        """Highest τ-order present, None for the zero symbol."""
        return max(self._terms, default=None)

    def order_bound(self) -> int:
        """Order, or floor - 1 for zero: an upper bound on the order of the true series."""
        order = self.order
        return self.floor - 1 if order is None else order

    # Window manipulation

    def truncate(self, floor: int) -> WkbSymbol:
        """Raise the floor, dropping terms below it."""
        return WkbSymbol(self.dim, max(floor, self.floor), self._terms)

    def shift(self, power: int) -> WkbSymbol:
        """Multiply by the central element τ^power."""
        return WkbSymbol(
            self.dim, self.floor + power, {j + power: p for j, p in self._terms.items()}
        )

    def equals_within(self, other: WkbSymbol) -> bool:
        """Equality on the common reliability window."""
        if self.dim != other.dim:
            raise DimensionMismatchError(self.dim, other.dim, "symbols")
        floor = max(self.floor, other.floor)
        mine = {j: p for j, p in self._terms.items() if j >= floor}
        theirs = {j: p for j, p in other._terms.items() if j >= floor}
        return mine == theirs

    # Arithmetic

    def _check(self, other: WkbSymbol) -> None:
        if self.dim != other.dim:
            raise DimensionMismatchError(self.dim, other.dim, "symbols")

    def __add__(self, other: WkbSymbol) -> WkbSymbol:
        self._check(other)
        floor = max(self.floor, other.floor)
        terms = dict(self._terms)
        for order, coefficient in other._terms.items():
            terms[order] = terms[order] + coefficient if order in terms else coefficient
        return WkbSymbol(self.dim, floor, terms)

    def __neg__(self) -> WkbSymbol:
        return WkbSymbol(self.dim, self.floor, {j: -p for j, p in self._terms.items()})

    def __sub__(self, other: WkbSymbol) -> WkbSymbol:
        return self + (-other)

    def scale(self, factor: RationalLike) -> WkbSymbol:
        factor = to_rational(factor)
        return WkbSymbol(self.dim, self.floor, {j: p.scale(factor) for j, p in self._terms.items()})

    def __mul__(self, other: WkbSymbol | RationalLike) -> WkbSymbol:
        if isinstance(other, WkbSymbol):
            return star_product(self, other)
        return self.scale(other)

    def __rmul__(self, other: RationalLike) -> WkbSymbol:
        return self.scale(other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WkbSymbol):
            return NotImplemented
        return self.dim == other.dim and self.floor == other.floor and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.dim, self.floor, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"WkbSymbol(dim={self.dim}, floor={self.floor}, terms={self._terms!r})"

    def __str__(self) -> str:
        from wkb_engine.parsers.printer import format_symbol

        return format_symbol(self)


@dataclass(frozen=True)
class OrderInfo:
    """Order m and principal symbol σ_m; order None stands for minus infinity."""

    order: int | None
    principal: MultiPoly

    @property
    def is_minus_infinity(self) -> bool:
        return self.order is None

    def __str__(self) -> str:
        if self.order is None:
            return "minus-infinity"
        return f"({self.order}, {self.principal})"


def order_and_principal(symbol: WkbSymbol) -> OrderInfo:
    """Highest τ-order with a nonzero coefficient and that coefficient."""
    order = symbol.order
    if order is None:
        return OrderInfo(None, MultiPoly.zero(symbol.dim))
    return OrderInfo(order, symbol.coefficient(order))


def star_floor(p: WkbSymbol, q: WkbSymbol) -> int:
    """Reliability floor of p ⋆ q: max(F_p + ord q, F_q + ord p)."""
    return max(p.floor + q.order_bound(), q.floor + p.order_bound())


def _multi_indices(bounds: list[int], budget: int) -> Iterator[tuple[int, ...]]:
    for alpha in product(*(range(b + 1) for b in bounds)):
        if sum(alpha) <= budget:
            yield alpha


def star_product(p: WkbSymbol, q: WkbSymbol) -> WkbSymbol:
    """
    Leibniz product σ(P∘Q) = Σ_α τ^{-|α|}/α! ∂_u^α σ(P) ∂_x^α σ(Q).

    Only contributions at orders >= the propagated floor are computed.

    Raises:
        DimensionMismatchError: If the symbols have different dimensions
    """
    if p.dim != q.dim:
        raise DimensionMismatchError(p.dim, q.dim, "symbols")
    n = p.dim
    floor = star_floor(p, q)
    result: dict[int, MultiPoly] = {}
    for j, p_coefficient in p.items():
        u_degrees = [p_coefficient.slot_degree(n + i) for i in range(n)]
        u_cache: dict[tuple[int, ...], MultiPoly] = {}
        for k, q_coefficient in q.items():
            budget = j + k - floor
            if budget < 0:
                continue
            bounds = [
                max(0, min(u_degrees[i], q_coefficient.slot_degree(i))) for i in range(n)
            ]
            for alpha in _multi_indices(bounds, budget):
                if alpha not in u_cache:
                    u_cache[alpha] = multi_derivative(p_coefficient, (0,) * n + alpha)
                left = u_cache[alpha]
                if left.is_zero():
                    continue
                right = multi_derivative(q_coefficient, alpha + (0,) * n)
                if right.is_zero():
                    continue
                weight = Fraction(1)
                for a in alpha:
                    weight /= factorial(a)
                order = j + k - sum(alpha)
                term = (left * right).scale(weight)
                result[order] = result[order] + term if order in result else term
    return WkbSymbol(n, floor, result)


def commutator(p: WkbSymbol, q: WkbSymbol) -> WkbSymbol:
    """[P, Q] = P⋆Q - Q⋆P."""
    return star_product(p, q) - star_product(q, p)
