"""
Sparse multivariate polynomials with exact rational coefficients

A MultiPoly of dimension n is a polynomial in the position variables
x_1..x_n and the momentum variables u_1..u_n. Terms are keyed by a dense
exponent vector of length 2n laid out as (x_1..x_n, u_1..u_n).
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator, Mapping, Sequence
from fractions import Fraction
from math import factorial
from types import MappingProxyType
from typing import Literal, NamedTuple

from wkb_engine.errors import DimensionMismatchError, IndexOutOfRangeError
from wkb_engine.polycore.rational import RationalLike, to_rational

Exponent = tuple[int, ...]

_VARIABLE_PATTERN = re.compile(r"([xu])([1-9][0-9]*)")


class Variable(NamedTuple):
    """A position (x) or momentum (u) variable with a 1-based index."""

    kind: Literal["x", "u"]
    index: int

    @classmethod
    def parse(cls, name: str) -> Variable:
        match = _VARIABLE_PATTERN.fullmatch(name)
        if not match:
            raise ValueError(f"not a variable name: {name!r}")
        return cls(match.group(1), int(match.group(2)))  # type: ignore[arg-type]

    def slot(self, dim: int) -> int:
        """Position of the variable inside an exponent vector."""
        if not 1 <= self.index <= dim:
            raise IndexOutOfRangeError(self.kind, self.index, dim)
        return self.index - 1 if self.kind == "x" else dim + self.index - 1

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"


def slot_variable(slot: int, dim: int) -> Variable:
    """Inverse of Variable.slot."""
    if slot < dim:
        return Variable("x", slot + 1)
    return Variable("u", slot - dim + 1)


def _as_variable(var: Variable | str) -> Variable:
    return var if isinstance(var, Variable) else Variable.parse(var)


class MultiPoly:
    """
    Immutable exact polynomial in x_1..x_n, u_1..u_n.

    Zero coefficients are never stored. Dimension 0 is allowed and holds the
    constants.
    """

    __slots__ = ("dim", "_terms", "_hash")

    def __init__(self, dim: int, terms: Mapping[Exponent, RationalLike] | None = None):
        if dim < 0:
            raise ValueError(f"dimension must be non-negative, got {dim}")
        self.dim = dim
        cleaned: dict[Exponent, Fraction] = {}
        for exponent, coefficient in (terms or {}).items():
            exponent = tuple(exponent)
            if len(exponent) != 2 * dim or any(e < 0 for e in exponent):
                raise ValueError(f"bad exponent vector {exponent} for dim {dim}")
            value = to_rational(coefficient)
            if value:
                cleaned[exponent] = cleaned.get(exponent, Fraction(0)) + value
                if not cleaned[exponent]:
                    del cleaned[exponent]
        self._terms = cleaned
        self._hash: int | None = None

    @classmethod
    def _raw(cls, dim: int, terms: dict[Exponent, Fraction]) -> MultiPoly:
        """Wrap an already normalized term map without copying."""
        poly = cls.__new__(cls)
        poly.dim = dim
        poly._terms = terms
        poly._hash = None
        return poly

    # Constructors

    @classmethod
    def zero(cls, dim: int) -> MultiPoly:
        return cls._raw(dim, {})

    @classmethod
    def constant(cls, dim: int, value: RationalLike) -> MultiPoly:
        value = to_rational(value)
        return cls._raw(dim, {(0,) * (2 * dim): value} if value else {})

    @classmethod
    def one(cls, dim: int) -> MultiPoly:
        return cls.constant(dim, 1)

    @classmethod
    def variable(cls, dim: int, var: Variable | str) -> MultiPoly:
        slot = _as_variable(var).slot(dim)
        exponent = [0] * (2 * dim)
        exponent[slot] = 1
        return cls._raw(dim, {tuple(exponent): Fraction(1)})

    @classmethod
    def x(cls, dim: int, index: int) -> MultiPoly:
        return cls.variable(dim, Variable("x", index))

    @classmethod
    def u(cls, dim: int, index: int) -> MultiPoly:
        return cls.variable(dim, Variable("u", index))

    @classmethod
    def monomial(
        cls,
        dim: int,
        x_exponents: Sequence[int],
        u_exponents: Sequence[int],
        coefficient: RationalLike = 1,
    ) -> MultiPoly:
        if len(x_exponents) != dim or len(u_exponents) != dim:
            raise ValueError(f"monomial exponents must have length {dim}")
        return cls(dim, {tuple(x_exponents) + tuple(u_exponents): coefficient})

    # Inspection

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return MappingProxyType(self._terms)

    def items(self) -> Iterator[tuple[Exponent, Fraction]]:
        return iter(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(exponent) for exponent in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * (2 * self.dim), Fraction(0))

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(exponent) for exponent in self._terms), default=-1)

    def slot_degree(self, slot: int) -> int:
        return max((exponent[slot] for exponent in self._terms), default=-1)

    def degree_in(self, var: Variable | str) -> int:
        return self.slot_degree(_as_variable(var).slot(self.dim))

    def without_constant(self) -> MultiPoly:
        zero_exponent = (0,) * (2 * self.dim)
        return MultiPoly._raw(
            self.dim, {e: c for e, c in self._terms.items() if e != zero_exponent}
        )

    def evaluate(self, point: Sequence[RationalLike]) -> Fraction:
        """Exact value at a point given as (x_1..x_n, u_1..u_n)."""
        if len(point) != 2 * self.dim:
            raise DimensionMismatchError(len(point), 2 * self.dim, "point and polynomial")
        values = [to_rational(v) for v in point]
        total = Fraction(0)
        for exponent, coefficient in self._terms.items():
            term = coefficient
            for value, power in zip(values, exponent):
                if power:
                    term *= value**power
            total += term
        return total

    # Arithmetic

    def _check(self, other: MultiPoly) -> None:
        if self.dim != other.dim:
            raise DimensionMismatchError(self.dim, other.dim, "polynomials")

    def __add__(self, other: MultiPoly | RationalLike) -> MultiPoly:
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.dim, other)
        self._check(other)
        result = dict(self._terms)
        for exponent, coefficient in other._terms.items():
            value = result.get(exponent, Fraction(0)) + coefficient
            if value:
                result[exponent] = value
            else:
                result.pop(exponent, None)
        return MultiPoly._raw(self.dim, result)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly._raw(self.dim, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: MultiPoly | RationalLike) -> MultiPoly:
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.dim, other)
        return self + (-other)

    def __rsub__(self, other: RationalLike) -> MultiPoly:
        return MultiPoly.constant(self.dim, other) - self

    def scale(self, factor: RationalLike) -> MultiPoly:
        factor = to_rational(factor)
        if not factor:
            return MultiPoly.zero(self.dim)
        return MultiPoly._raw(self.dim, {e: c * factor for e, c in self._terms.items()})

    def __mul__(self, other: MultiPoly | RationalLike) -> MultiPoly:
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        self._check(other)
        result: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exponent = tuple(a + b for a, b in zip(e1, e2))
                result[exponent] = result.get(exponent, Fraction(0)) + c1 * c2
        return MultiPoly._raw(self.dim, {e: c for e, c in result.items() if c})

    def __rmul__(self, other: RationalLike) -> MultiPoly:
        return self.scale(other)

    def __pow__(self, power: int) -> MultiPoly:
        if power < 0:
            raise ValueError("polynomials only admit natural powers")
        result = MultiPoly.one(self.dim)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    # Comparison

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiPoly):
            return self.dim == other.dim and self._terms == other._terms
        if isinstance(other, int | Fraction):
            return self.is_constant() and self.constant_term() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.dim, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"MultiPoly(dim={self.dim}, terms={self._terms!r})"

    def __str__(self) -> str:
        from wkb_engine.parsers.printer import format_poly

        return format_poly(self)


Operation = Literal["add", "sub", "mul", "scale"]


def poly_arith(p: MultiPoly, q: MultiPoly | RationalLike, op: Operation) -> MultiPoly:
    """
    Exact ring operation on two polynomials of the same dimension.

    Args:
        p: Left operand
        q: Right operand; a rational for "scale"
        op: One of add, sub, mul, scale

    Returns:
        Normalized result
    """
    if op == "scale":
        if isinstance(q, MultiPoly):
            raise TypeError("scale takes a rational second operand")
        return p.scale(q)
    if not isinstance(q, MultiPoly):
        raise TypeError(f"{op} takes a polynomial second operand")
    if p.dim != q.dim:
        raise DimensionMismatchError(p.dim, q.dim, "polynomials")
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown operation {op!r}")


def derivative_slot(p: MultiPoly, slot: int, order: int = 1) -> MultiPoly:
    """Iterated partial derivative with respect to the variable in an exponent slot."""
    if order == 0:
        return p
    result: dict[Exponent, Fraction] = {}
    for exponent, coefficient in p.items():
        power = exponent[slot]
        if power < order:
            continue
        falling = factorial(power) // factorial(power - order)
        lowered = exponent[:slot] + (power - order,) + exponent[slot + 1 :]
        result[lowered] = coefficient * falling
    return MultiPoly._raw(p.dim, result)


def partial_derivative(p: MultiPoly, var: Variable | str, order: int = 1) -> MultiPoly:
    """
    Exact iterated partial derivative.

    Args:
        p: Polynomial to differentiate
        var: Variable such as "x1" or Variable("u", 2)
        order: Number of derivatives to take

    Raises:
        IndexOutOfRangeError: If the variable index exceeds the dimension
    """
    if order < 0:
        raise ValueError("derivative order must be natural")
    return derivative_slot(p, _as_variable(var).slot(p.dim), order)


def multi_derivative(p: MultiPoly, orders: Sequence[int]) -> MultiPoly:
    """Apply ∂^orders slot by slot; orders has length 2n."""
    result = p
    for slot, order in enumerate(orders):
        if order:
            result = derivative_slot(result, slot, order)
            if result.is_zero():
                break
    return result


def poisson_bracket(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """
    Poisson bracket {p,q} = Σ_i (∂p/∂u_i ∂q/∂x_i - ∂q/∂u_i ∂p/∂x_i).

    The sign makes the leading term of the star commutator τ^{-1}{p, q}.
    """
    if p.dim != q.dim:
        raise DimensionMismatchError(p.dim, q.dim, "polynomials")
    n = p.dim
    result = MultiPoly.zero(n)
    for i in range(n):
        result = result + derivative_slot(p, n + i) * derivative_slot(q, i)
        result = result - derivative_slot(q, n + i) * derivative_slot(p, i)
    return result


def exterior_derivative(h: MultiPoly) -> list[MultiPoly]:
    """Coefficients (∂h/∂x_1..∂h/∂x_n, ∂h/∂u_1..∂h/∂u_n) of dh."""
    return [derivative_slot(h, slot) for slot in range(2 * h.dim)]


def pullback(p: MultiPoly, images: Sequence[MultiPoly]) -> MultiPoly:
    """
    Substitute images for (x_1..x_n, u_1..u_n).

    Args:
        p: Polynomial of dimension n
        images: 2n polynomials sharing a common dimension m

    Returns:
        The composite polynomial of dimension m
    """
    if len(images) != 2 * p.dim:
        raise DimensionMismatchError(len(images), 2 * p.dim, "images and variables")
    if images:
        target_dim = images[0].dim
        for image in images:
            if image.dim != target_dim:
                raise DimensionMismatchError(image.dim, target_dim, "substitution images")
    else:
        target_dim = 0
    powers: list[list[MultiPoly]] = [[MultiPoly.one(target_dim)] for _ in images]
    result = MultiPoly.zero(target_dim)
    for exponent, coefficient in p.items():
        term = MultiPoly.constant(target_dim, coefficient)
        for slot, power in enumerate(exponent):
            if not power:
                continue
            cache = powers[slot]
            while len(cache) <= power:
                cache.append(cache[-1] * images[slot])
            term = term * cache[power]
        result = result + term
    return result


def sum_polys(polys: Iterable[MultiPoly], dim: int) -> MultiPoly:
    total = MultiPoly.zero(dim)
    for poly in polys:
        total = total + poly
    return total
