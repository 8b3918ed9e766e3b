"""
Automorphism records

A record stores the images X_i, U_i of the generators x_i, u_i under a
quantized symplectic transformation, the translation constant c of δ_c and
the primitive a of the underlying contact lift. Records act on symbols by
normal-ordered substitution and compose as A∘B: P ↦ A(B(P)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from loguru import logger

from wkb_engine.errors import DepthExhaustedError, DimensionMismatchError
from wkb_engine.polycore import Exponent, MultiPoly, pullback
from wkb_engine.quantize.symplectic import SymplecticMapSpec, compose_specs
from wkb_engine.symbol import WkbSymbol, commutator, invert, star_product


@dataclass(frozen=True)
class AutomorphismRecord:
    """
    Generator images of a quantized symplectic transformation.

    Attributes:
        dim: Number of position variables
        c: Translation constant of δ_c, invisible on symbols
        x_images: X_1..X_n, order 0 with σ_0(X_i) = f_i
        u_images: U_1..U_n, order 0 with σ_0(U_i) = g_i
        primitive: a in target-chart coordinates
        depth: Window depth K; images carry floor -K
        map_spec: Underlying symplectic map with its inverse
    """

    dim: int
    c: Fraction
    x_images: tuple[WkbSymbol, ...]
    u_images: tuple[WkbSymbol, ...]
    primitive: MultiPoly
    depth: int
    map_spec: SymplecticMapSpec

    def __post_init__(self):
        if self.depth < 0:
            raise DepthExhaustedError(f"record depth must be non-negative, got {self.depth}")
        if len(self.x_images) != self.dim or len(self.u_images) != self.dim:
            raise DimensionMismatchError(
                len(self.x_images) + len(self.u_images), 2 * self.dim, "generator images"
            )
        for image in self.images:
            if image.dim != self.dim:
                raise DimensionMismatchError(image.dim, self.dim, "generator image")
        if self.map_spec.dim != self.dim:
            raise DimensionMismatchError(self.map_spec.dim, self.dim, "record and map spec")

    @property
    def images(self) -> tuple[WkbSymbol, ...]:
        return self.x_images + self.u_images

    @property
    def floor(self) -> int:
        return -self.depth

    def principal_images(self) -> tuple[MultiPoly, ...]:
        return tuple(image.coefficient(0) for image in self.images)

    def is_above_identity(self) -> bool:
        coordinates = SymplecticMapSpec.identity(self.dim).forward
        return self.principal_images() == coordinates


def identity_record(dim: int, depth: int, c: Fraction | int = 0) -> AutomorphismRecord:
    """Record with X_i = x_i, U_i = u_i and translation constant c."""
    floor = -depth
    return AutomorphismRecord(
        dim=dim,
        c=Fraction(c),
        x_images=tuple(WkbSymbol.x(dim, i, floor) for i in range(1, dim + 1)),
        u_images=tuple(WkbSymbol.u(dim, i, floor) for i in range(1, dim + 1)),
        primitive=MultiPoly.constant(dim, c),
        depth=depth,
        map_spec=SymplecticMapSpec.identity(dim, c),
    )


class _NormalOrderedSubstitution:
    """Caches X^β and U^γ for one record while a symbol is substituted."""

    def __init__(self, record: AutomorphismRecord):
        self.record = record
        self.one = WkbSymbol.one(record.dim, record.floor)
        self._x_cache: dict[tuple[int, ...], WkbSymbol] = {}
        self._u_cache: dict[tuple[int, ...], WkbSymbol] = {}
        self._power_cache: dict[tuple[int, int], WkbSymbol] = {}

    def _generator_power(self, slot: int, exponent: int) -> WkbSymbol:
        key = (slot, exponent)
        if key not in self._power_cache:
            if exponent == 0:
                self._power_cache[key] = self.one
            else:
                previous = self._generator_power(slot, exponent - 1)
                self._power_cache[key] = star_product(previous, self.record.images[slot])
        return self._power_cache[key]

    def _ordered_product(
        self, exponents: tuple[int, ...], offset: int, cache: dict[tuple[int, ...], WkbSymbol]
    ) -> WkbSymbol:
        if exponents not in cache:
            result = self.one
            for i, power in enumerate(exponents):
                if power:
                    result = star_product(result, self._generator_power(offset + i, power))
            cache[exponents] = result
        return cache[exponents]

    def monomial(self, exponent: Exponent) -> WkbSymbol:
        n = self.record.dim
        x_part = self._ordered_product(exponent[:n], 0, self._x_cache)
        u_part = self._ordered_product(exponent[n:], n, self._u_cache)
        return star_product(x_part, u_part)


def apply_automorphism(record: AutomorphismRecord, symbol: WkbSymbol) -> WkbSymbol:
    """
    Substitute the generator images into a symbol.

    Each monomial x^β u^γ τ^j becomes X^β ⋆ U^γ ⋆ τ^j with the X-factors to the
    left; the X's commute pairwise and so do the U's, so the order inside each
    group is irrelevant.

    Raises:
        DimensionMismatchError: If the symbol and record dimensions differ
    """
    if record.dim != symbol.dim:
        raise DimensionMismatchError(record.dim, symbol.dim, "record and symbol")
    substitution = _NormalOrderedSubstitution(record)
    result = WkbSymbol.zero(symbol.dim, symbol.floor)
    for order, coefficient in symbol.items():
        for exponent, value in coefficient.items():
            result = result + substitution.monomial(exponent).scale(value).shift(order)
    return result


def compose_automorphisms(
    first: AutomorphismRecord, second: AutomorphismRecord
) -> AutomorphismRecord:
    """
    Record of first∘second: P ↦ first(second(P)).

    Images are second's images pushed through first, translation constants
    add, and the primitive is a_second + a_first pulled back through second's
    inverse map.

    Raises:
        DimensionMismatchError: If the records have different dimensions
        DepthExhaustedError: If the composite window is empty
    """
    if first.dim != second.dim:
        raise DimensionMismatchError(first.dim, second.dim, "records")
    images = [apply_automorphism(first, image) for image in second.images]
    floor = max(image.floor for image in images) if images else -min(first.depth, second.depth)
    if floor > 0:
        raise DepthExhaustedError(f"composite window is empty (floor {floor})")
    images = [image.truncate(floor) for image in images]
    n = first.dim
    primitive = second.primitive + pullback(first.primitive, second.map_spec.inverse)
    return AutomorphismRecord(
        dim=n,
        c=first.c + second.c,
        x_images=tuple(images[:n]),
        u_images=tuple(images[n:]),
        primitive=primitive,
        depth=-floor,
        map_spec=compose_specs(first.map_spec, second.map_spec),
    )


def ad_automorphism(symbol: WkbSymbol, c: Fraction | int = 0) -> AutomorphismRecord:
    """
    Record of δ_c∘Ad(P): X_i = P⋆x_i⋆P^{-1}, U_i = P⋆u_i⋆P^{-1}.

    The window depth is the depth of P relative to its order.

    Raises:
        NotInvertibleError: If P has a zero or non-constant principal symbol
    """
    inverse = invert(symbol)
    n = symbol.dim
    depth = symbol.order_bound() - symbol.floor
    floor = -depth

    def conjugate(generator: WkbSymbol) -> WkbSymbol:
        return star_product(star_product(symbol, generator), inverse).truncate(floor)

    return AutomorphismRecord(
        dim=n,
        c=Fraction(c),
        x_images=tuple(conjugate(WkbSymbol.x(n, i, floor)) for i in range(1, n + 1)),
        u_images=tuple(conjugate(WkbSymbol.u(n, i, floor)) for i in range(1, n + 1)),
        primitive=MultiPoly.constant(n, c),
        depth=depth,
        map_spec=SymplecticMapSpec.identity(n, c),
    )


def commutator_defects(record: AutomorphismRecord) -> list[tuple[str, WkbSymbol]]:
    """
    All canonical-commutation defects of a record.

    Returns:
        [X_i,X_j] and [U_i,U_j] for i < j, then [X_i,U_j] + τ^{-1}δ_ij for all i, j
    """
    n = record.dim
    xs, us = record.x_images, record.u_images
    defects: list[tuple[str, WkbSymbol]] = []
    for i in range(n):
        for j in range(i + 1, n):
            defects.append((f"[X{i + 1},X{j + 1}]", commutator(xs[i], xs[j])))
            defects.append((f"[U{i + 1},U{j + 1}]", commutator(us[i], us[j])))
    for i in range(n):
        for j in range(n):
            defect = commutator(xs[i], us[j])
            name = f"[X{i + 1},U{j + 1}]"
            if i == j:
                defect = defect + WkbSymbol.tau_power(n, -1, defect.floor)
                name += "+tau^-1"
            defects.append((name, defect))
    return defects


def nonzero_defects(record: AutomorphismRecord) -> dict[str, WkbSymbol]:
    """Defects that do not vanish within the window, by name."""
    found = {name: defect for name, defect in commutator_defects(record) if not defect.is_zero()}
    if found:
        logger.debug(f"Record has {len(found)} nonzero commutator defects")
    return found


def records_equal_within(first: AutomorphismRecord, second: AutomorphismRecord) -> bool:
    """Same dimension, same c and generator images equal on the common window."""
    if first.dim != second.dim:
        raise DimensionMismatchError(first.dim, second.dim, "records")
    return first.c == second.c and all(
        mine.equals_within(theirs) for mine, theirs in zip(first.images, second.images)
    )
