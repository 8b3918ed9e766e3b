"""
Polynomial symplectic maps

A SymplecticMapSpec describes (x, u) ↦ (f(x, u), g(x, u)) together with its
polynomial inverse. The forward components are the principal symbols of the
generator images of any quantization above the map.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from loguru import logger

from wkb_engine.errors import DimensionMismatchError
from wkb_engine.polycore import (
    MultiPoly,
    derivative_slot,
    poincare_primitive,
    poisson_bracket,
    pullback,
    slot_variable,
)


@dataclass(frozen=True)
class SymplecticMapSpec:
    """Forward components (f_1..f_n, g_1..g_n), inverse components and primitive shift."""

    dim: int
    forward: tuple[MultiPoly, ...]
    inverse: tuple[MultiPoly, ...]
    primitive_shift: Fraction = Fraction(0)

    def __post_init__(self):
        for name, components in (("forward", self.forward), ("inverse", self.inverse)):
            if len(components) != 2 * self.dim:
                raise DimensionMismatchError(len(components), 2 * self.dim, f"{name} components")
            for component in components:
                if component.dim != self.dim:
                    raise DimensionMismatchError(component.dim, self.dim, f"{name} component")

    @property
    def f(self) -> tuple[MultiPoly, ...]:
        return self.forward[: self.dim]

    @property
    def g(self) -> tuple[MultiPoly, ...]:
        return self.forward[self.dim :]

    @classmethod
    def identity(cls, dim: int, shift: Fraction | int = 0) -> SymplecticMapSpec:
        coordinates = tuple(MultiPoly.variable(dim, slot_variable(s, dim)) for s in range(2 * dim))
        return cls(dim, coordinates, coordinates, Fraction(shift))

    def inverted(self) -> SymplecticMapSpec:
        """The inverse map, with the opposite shift."""
        return SymplecticMapSpec(self.dim, self.inverse, self.forward, -self.primitive_shift)


@dataclass(frozen=True)
class SymplecticVerdict:
    """Outcome of check_symplectic; failure names the first failing identity."""

    passed: bool
    failure: str | None = None
    checked: list[str] = field(default_factory=list)


def compose_specs(first: SymplecticMapSpec, second: SymplecticMapSpec) -> SymplecticMapSpec:
    """
    Map of the record composition first∘second.

    Generator images compose by substitution, so the forward components of
    the composite are second's components evaluated at first's.
    """
    if first.dim != second.dim:
        raise DimensionMismatchError(first.dim, second.dim, "map specs")
    forward = tuple(pullback(component, first.forward) for component in second.forward)
    inverse = tuple(pullback(component, second.inverse) for component in first.inverse)
    return SymplecticMapSpec(
        first.dim, forward, inverse, first.primitive_shift + second.primitive_shift
    )


def _bracket_failure(name: str, value: MultiPoly, expected: int) -> str:
    return f"{name} = {value} != {expected}"


def check_symplectic(spec: SymplecticMapSpec) -> SymplecticVerdict:
    """
    Verify {f_i,f_j} = 0, {g_i,g_j} = 0, {f_i,g_j} = -δ_ij and both inverse identities.

    Returns:
        A passing verdict, or the first failing identity as text
    """
    n = spec.dim
    checked: list[str] = []
    f, g = spec.f, spec.g
    for i in range(n):
        for j in range(i + 1, n):
            for label, left, right in (("f", f[i], f[j]), ("g", g[i], g[j])):
                name = f"{{{label}{i + 1},{label}{j + 1}}}"
                value = poisson_bracket(left, right)
                checked.append(name)
                if not value.is_zero():
                    return SymplecticVerdict(False, _bracket_failure(name, value, 0), checked)
    for i in range(n):
        for j in range(n):
            name = f"{{f{i + 1},g{j + 1}}}"
            expected = -1 if i == j else 0
            value = poisson_bracket(f[i], g[j])
            checked.append(name)
            if value != MultiPoly.constant(n, expected):
                return SymplecticVerdict(False, _bracket_failure(name, value, expected), checked)
    for label, outer, inner in (
        ("forward∘inverse", spec.forward, spec.inverse),
        ("inverse∘forward", spec.inverse, spec.forward),
    ):
        for slot, component in enumerate(outer):
            name = f"{label}[{slot_variable(slot, n)}]"
            value = pullback(component, inner)
            expected = MultiPoly.variable(n, slot_variable(slot, n))
            checked.append(name)
            if value != expected:
                return SymplecticVerdict(False, f"{name} = {value} != {expected}", checked)
    return SymplecticVerdict(True, None, checked)


def compute_primitive(spec: SymplecticMapSpec) -> MultiPoly:
    """
    Primitive a with u dx - v dy = da in target coordinates (y, v).

    Integrates ω = Σ u_i dx_i - Σ_j g_j df_j in source coordinates, pulls the
    primitive back through the inverse map and adds the primitive shift.

    Raises:
        NotClosedFormError: If ω is not closed, which means the map is not symplectic
    """
    n = spec.dim
    omega: list[MultiPoly] = []
    for slot in range(2 * n):
        coefficient = MultiPoly.u(n, slot + 1) if slot < n else MultiPoly.zero(n)
        for f_j, g_j in zip(spec.f, spec.g):
            coefficient = coefficient - g_j * derivative_slot(f_j, slot)
        omega.append(coefficient)
    source_primitive = poincare_primitive(omega)
    primitive = pullback(source_primitive, spec.inverse) + spec.primitive_shift
    logger.debug(f"Primitive of the contact lift: {primitive}")
    return primitive
