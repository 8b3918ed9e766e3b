"""
Tests for central parts and the commutant of the generators
"""

import pytest

from wkb_engine.polycore import MultiPoly
from wkb_engine.symbol import (
    WkbSymbol,
    central_part,
    commutant_basis,
    commutator,
    embed_scalar,
    is_central,
)

pytestmark = [pytest.mark.unit, pytest.mark.symbol]


@pytest.mark.parametrize(
    "text,central,residual",
    [
        ("2 + tau^-1*(3 + x1)", "2 + 3*tau^-1", "x1*tau^-1"),
        ("x1", "0", "x1"),
        ("5*tau^2", "5*tau^2", "0"),
    ],
)
def test_central_part(sym, text, central, residual):
    scalars, rest = central_part(sym(text))
    assert scalars.dim == 0
    assert (str(scalars), str(rest)) == (central, residual)


def test_central_part_keeps_floor(sym):
    p = sym("1 + tau^-2*x1", depth=3)
    scalars, rest = central_part(p)
    assert scalars.floor == rest.floor == p.floor


def test_is_central(sym):
    assert is_central(sym("3 + tau^-1"))
    assert not is_central(sym("3 + tau^-1*u1"))


def test_embed_scalar():
    scalar = WkbSymbol(0, -2, {0: MultiPoly.one(0), -1: MultiPoly.constant(0, 4)})
    embedded = embed_scalar(scalar, 2)
    assert embedded.dim == 2
    assert str(embedded) == "1 + 4*tau^-1"


def test_embed_scalar_needs_dim_zero(sym):
    with pytest.raises(ValueError):
        embed_scalar(sym("1"), 2)


@pytest.mark.slow
def test_commutant_is_spanned_by_constants():
    basis = commutant_basis(1, 2, 2)
    assert len(basis) == 3
    generators = [WkbSymbol.x(1, 1, -3), WkbSymbol.u(1, 1, -3)]
    for element in basis:
        assert is_central(element)
        for generator in generators:
            assert commutator(element, generator).is_zero()


def test_commutant_in_two_dimensions():
    basis = commutant_basis(2, 1, 1)
    assert len(basis) == 2
    assert all(is_central(element) for element in basis)


@pytest.mark.slow
@pytest.mark.parametrize("dim,max_degree", [(1, 3), (2, 2)])
def test_commutant_at_depth_six(dim, max_degree):
    basis = commutant_basis(dim, max_degree, 6)
    # one constant per τ-order 0, -1, ..., -6
    assert len(basis) == 7
    assert sorted(element.order for element in basis) == list(range(-6, 1))
    generators = [WkbSymbol.x(dim, i, -7) for i in range(1, dim + 1)]
    generators += [WkbSymbol.u(dim, i, -7) for i in range(1, dim + 1)]
    for element in basis:
        assert element.floor == -6
        assert is_central(element)
        for generator in generators:
            assert commutator(element, generator).is_zero()
