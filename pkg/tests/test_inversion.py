"""
Tests for inverses, square roots and exponential series
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tests.strategies import invertible_symbols, polys, self_adjoint_symbols
from wkb_engine.errors import NotInvertibleError, SquareRootError
from wkb_engine.polycore import MultiPoly
from wkb_engine.symbol import (
    WkbSymbol,
    adjoint,
    invert,
    is_star_unitary,
    square_root,
    star_exp,
    star_power,
    star_product,
    unitarize,
)

pytestmark = [pytest.mark.unit, pytest.mark.symbol]


class TestInvert:
    def test_one(self, sym):
        assert str(invert(sym("1"))) == "1"

    def test_geometric_series(self, sym):
        inverse = invert(sym("1 - tau^-1*u1", depth=3))
        assert inverse.floor == -3
        assert str(inverse) == "1 + u1*tau^-1 + u1^2*tau^-2 + u1^3*tau^-3"

    def test_cross_term_falls_below_window(self, sym):
        inverse = invert(sym("1 + tau^-1*x1*u1", depth=2))
        assert str(inverse) == "1 - x1*u1*tau^-1 + x1^2*u1^2*tau^-2"

    def test_positive_order(self, sym):
        assert str(invert(sym("2*tau", depth=3))) == "1/2*tau^-1"

    @pytest.mark.parametrize("text", ["x1", "0", "x1 + tau^-1"])
    def test_not_invertible(self, sym, text):
        with pytest.raises(NotInvertibleError):
            invert(sym(text))

    @given(invertible_symbols())
    def test_two_sided_inverse(self, p):
        inverse = invert(p)
        one = WkbSymbol.one(1, p.floor)
        assert star_product(p, inverse).equals_within(one)
        assert star_product(inverse, p).equals_within(one)


class TestSquareRoot:
    def test_one(self, sym):
        assert str(square_root(sym("1"))) == "1"

    def test_perfect_square(self, sym):
        root = square_root(sym("1 + 2*tau^-1*u1 + tau^-2*u1^2", depth=2))
        assert str(root) == "1 + u1*tau^-1"

    def test_needs_correction(self, sym):
        root = square_root(sym("1 + 2*tau^-1*x1", depth=2))
        assert str(root) == "1 + x1*tau^-1 - 1/2*x1^2*tau^-2"

    def test_negative_branch(self, sym):
        root = square_root(sym("4 + tau^-1*x1", depth=2), sign=-1)
        assert root.coefficient(0) == -2
        assert star_product(root, root).equals_within(sym("4 + tau^-1*x1", depth=2))

    @pytest.mark.parametrize("text", ["2", "-1", "tau", "x1", "0"])
    def test_rejected(self, sym, text):
        with pytest.raises(SquareRootError):
            square_root(sym(text))

    def test_sign_must_be_unit(self, sym):
        with pytest.raises(ValueError):
            square_root(sym("1"), sign=2)

    @settings(max_examples=50)
    @given(
        st.sampled_from([Fraction(1), Fraction(4), Fraction(9, 4)]),
        polys(max_degree=2),
        polys(max_degree=2),
    )
    def test_squares_back(self, lead, first, second):
        p = WkbSymbol(1, -4, {0: MultiPoly.constant(1, lead), -1: first, -2: second})
        plus, minus = square_root(p, 1), square_root(p, -1)
        assert star_product(plus, plus).equals_within(p)
        assert minus == -plus

    @settings(max_examples=50)
    @given(self_adjoint_symbols(), st.sampled_from([1, -1]))
    def test_self_adjoint_root(self, p, sign):
        assert adjoint(p).equals_within(p)
        root = square_root(p, sign)
        assert adjoint(root).equals_within(root)

    @pytest.mark.parametrize("dim", [1, 2])
    def test_root_of_gram_is_self_adjoint(self, sym, dim):
        p = sym("1 + tau^-1*x1 + tau^-2*x1*u1", dim=dim)
        gram = star_product(adjoint(p), p)
        root = square_root(gram)
        assert adjoint(root).equals_within(root)
        assert star_product(root, root).equals_within(gram)


class TestSeries:
    def test_exponential_inverse(self, sym):
        n = sym("tau^-1*x1")
        product = star_product(star_exp(n), star_exp(-n))
        assert product.equals_within(WkbSymbol.one(1, product.floor))

    def test_exponential_terms(self, sym):
        series = star_exp(sym("tau^-1", dim=0, depth=2))
        assert str(series) == "1 + tau^-1 + 1/2*tau^-2 + 1/6*tau^-3"

    def test_exponential_needs_negative_order(self, sym):
        with pytest.raises(ValueError):
            star_exp(sym("x1"))

    def test_exponential_is_unitary(self, sym):
        assert is_star_unitary(star_exp(sym("tau^-1*x1")))

    def test_power_matches_products(self, sym):
        u = sym("u1 + x1")
        assert star_power(u, 3).equals_within(star_product(star_product(u, u), u))
        assert star_power(u, 0).equals_within(sym("1"))

    def test_zeroth_power_of_zero(self, sym):
        assert str(star_power(sym("0"), 0)) == "1"
        assert str(star_power(sym("tau^2"), 0)) == "1"

    def test_negative_power_inverts(self, sym):
        p = sym("1 + tau^-1*x1")
        assert star_power(p, -2).equals_within(invert(star_product(p, p)))

    def test_unitarize(self, sym):
        p = sym("1 + tau^-1*x1 + tau^-2*u1")
        assert not is_star_unitary(p)
        assert is_star_unitary(unitarize(p))
