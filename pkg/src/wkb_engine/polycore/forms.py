"""
Polynomial differential forms on the affine chart

Closed polynomial forms are exact; the primitives below are the radial
homotopy operator evaluated monomial by monomial, so they vanish at the origin.
"""

from collections.abc import Sequence
from fractions import Fraction

from loguru import logger

from wkb_engine.errors import DimensionMismatchError, NotClosedFormError
from wkb_engine.polycore.polynomial import (
    Exponent,
    MultiPoly,
    derivative_slot,
    slot_variable,
)


def _common_dim(forms: Sequence[MultiPoly]) -> int:
    if not forms:
        return 0
    dim = forms[0].dim
    for coefficient in forms:
        if coefficient.dim != dim:
            raise DimensionMismatchError(coefficient.dim, dim, "form coefficients")
    return dim


def _radial_integral(coefficient: MultiPoly, slot: int, shift: int) -> dict[Exponent, Fraction]:
    """z_slot * coefficient with each degree-d monomial divided by d + shift."""
    result: dict[Exponent, Fraction] = {}
    for exponent, value in coefficient.items():
        degree = sum(exponent)
        raised = exponent[:slot] + (exponent[slot] + 1,) + exponent[slot + 1 :]
        result[raised] = value / (degree + shift)
    return result


def check_closed_one_form(omega: Sequence[MultiPoly]) -> None:
    """Raise NotClosedFormError at the first pair with ∂_a ω_b != ∂_b ω_a."""
    dim = _common_dim(omega)
    for a in range(2 * dim):
        for b in range(a + 1, 2 * dim):
            if derivative_slot(omega[b], a) != derivative_slot(omega[a], b):
                pair = (str(slot_variable(a, dim)), str(slot_variable(b, dim)))
                raise NotClosedFormError(pair)


def poincare_primitive(omega: Sequence[MultiPoly]) -> MultiPoly:
    """
    Primitive of a closed polynomial 1-form Σ A_i dx_i + B_i du_i.

    Args:
        omega: The 2n coefficients (A_1..A_n, B_1..B_n)

    Returns:
        h with dh = omega and h(0) = 0

    Raises:
        NotClosedFormError: Naming the first failing compatibility pair
    """
    dim = _common_dim(omega)
    if len(omega) != 2 * dim:
        raise DimensionMismatchError(len(omega), 2 * dim, "form and variables")
    check_closed_one_form(omega)
    terms: dict[Exponent, Fraction] = {}
    for slot, coefficient in enumerate(omega):
        for exponent, value in _radial_integral(coefficient, slot, 1).items():
            terms[exponent] = terms.get(exponent, Fraction(0)) + value
    return MultiPoly(dim, terms)


TwoForm = Sequence[Sequence[MultiPoly]]


def check_closed_two_form(omega: TwoForm) -> None:
    """Antisymmetry and dΩ = 0 on every triple of slots."""
    size = len(omega)
    dim = size // 2
    for a in range(size):
        if len(omega[a]) != size:
            raise DimensionMismatchError(len(omega[a]), size, "two-form rows")
        if not omega[a][a].is_zero():
            name = str(slot_variable(a, dim))
            raise NotClosedFormError((name, name), "diagonal entry is not zero")
        for b in range(a + 1, size):
            if omega[a][b] != -omega[b][a]:
                pair = (str(slot_variable(a, dim)), str(slot_variable(b, dim)))
                raise NotClosedFormError(pair, "matrix is not antisymmetric")
    for a in range(size):
        for b in range(a + 1, size):
            for c in range(b + 1, size):
                cyclic = (
                    derivative_slot(omega[b][c], a)
                    + derivative_slot(omega[c][a], b)
                    + derivative_slot(omega[a][b], c)
                )
                if not cyclic.is_zero():
                    triple = tuple(str(slot_variable(s, dim)) for s in (a, b, c))
                    raise NotClosedFormError(triple, "dΩ does not vanish")


def closed_two_form_primitive(omega: TwoForm) -> list[MultiPoly]:
    """
    1-form β with dβ = Ω for a closed polynomial 2-form.

    Ω is given as the full antisymmetric 2n×2n coefficient matrix, so that
    Ω = Σ_{a<b} Ω_ab dz_a∧dz_b and (dβ)_ab = ∂_a β_b - ∂_b β_a.

    Returns:
        The 2n coefficients of β, each vanishing at the origin
    """
    size = len(omega)
    dim = size // 2
    if size % 2:
        raise ValueError("a two-form on T*X has an even number of slots")
    check_closed_two_form(omega)
    beta: list[dict[Exponent, Fraction]] = [{} for _ in range(size)]
    for a in range(size):
        for b in range(size):
            if a == b or omega[a][b].is_zero():
                continue
            for exponent, value in _radial_integral(omega[a][b], a, 2).items():
                beta[b][exponent] = beta[b].get(exponent, Fraction(0)) + value
    logger.debug(f"Integrated closed two-form on {size} slots")
    return [MultiPoly(dim, terms) for terms in beta]
