"""
Tests for the star product, orders and the homogeneous bridge
"""

import pytest
from hypothesis import assume, given, settings

from tests.strategies import symbol_tuples, symbols
from wkb_engine.errors import DimensionMismatchError, NotHomogeneousError
from wkb_engine.parsers import parse_poly
from wkb_engine.polycore import MultiPoly, poisson_bracket
from wkb_engine.symbol import (
    WkbSymbol,
    commutator,
    dehomogenize,
    order_and_principal,
    star_floor,
    star_product,
)

pytestmark = [pytest.mark.unit, pytest.mark.symbol]


class TestStarProduct:
    def test_u_independent_left_factor(self, sym):
        assert str(star_product(sym("x1"), sym("u1"))) == "x1*u1"

    def test_canonical_commutation(self, sym):
        assert str(star_product(sym("u1"), sym("x1"))) == "x1*u1 + tau^-1"

    def test_second_order_terms(self, sym):
        product = star_product(sym("u1^2"), sym("x1^2"))
        assert str(product) == "x1^2*u1^2 + 4*x1*u1*tau^-1 + 2*tau^-2"

    def test_floor_propagation(self, sym):
        p = sym("tau*u1", depth=2)
        q = sym("x1", depth=5)
        assert p.floor == -1 and q.floor == -5
        assert star_floor(p, q) == max(-1 + 0, -5 + 1)
        assert star_product(p, q).floor == -1

    def test_terms_below_floor_are_dropped(self, sym):
        product = star_product(sym("u1^3", depth=1), sym("x1^3", depth=1))
        assert product.floor == -1
        assert product.coefficient(-2).is_zero()
        assert product.coefficient(-1) == parse_poly("9*x1^2*u1^2", 1)

    def test_dimension_mismatch(self, sym):
        with pytest.raises(DimensionMismatchError):
            star_product(sym("x1"), sym("x2", dim=2))

    def test_two_variables_commute_across_indices(self, sym):
        p, q = sym("u1", dim=2), sym("x2", dim=2)
        assert commutator(p, q).is_zero()

    @settings(max_examples=100)
    @given(symbol_tuples(3))
    def test_associative(self, triple):
        p, q, r = triple
        left = star_product(star_product(p, q), r)
        right = star_product(p, star_product(q, r))
        assert left.equals_within(right)

    @given(symbols(), symbols())
    def test_graded_multiplicative(self, p, q):
        assume(not p.is_zero() and not q.is_zero())
        info = order_and_principal(star_product(p, q))
        assert info.order == p.order + q.order
        assert info.principal == p.coefficient(p.order) * q.coefficient(q.order)

    @settings(max_examples=100)
    @given(symbol_tuples(2))
    def test_leading_commutator_is_poisson_bracket(self, pair):
        p, q = pair
        assume(not p.is_zero() and not q.is_zero())
        assume(p.order > p.floor and q.order > q.floor)
        bracket = poisson_bracket(p.coefficient(p.order), q.coefficient(q.order))
        assert commutator(p, q).coefficient(p.order + q.order - 1) == bracket


class TestOrder:
    def test_constant_leading_term(self, sym):
        assert str(order_and_principal(sym("1 + tau^-1*x1"))) == "(0, 1)"

    def test_positive_order(self, sym):
        info = order_and_principal(sym("tau^2*u1 + x1"))
        assert info.order == 2
        assert info.principal == parse_poly("u1", 1)

    def test_zero_symbol(self, sym):
        info = order_and_principal(sym("0"))
        assert info.is_minus_infinity
        assert str(info) == "minus-infinity"


class TestCommutator:
    def test_canonical_pair(self, sym):
        assert str(commutator(sym("x1"), sym("u1"))) == "-tau^-1"

    def test_self_commutator(self, sym):
        assert commutator(sym("x1"), sym("x1")).is_zero()

    def test_against_square(self, sym):
        assert str(commutator(sym("u1"), sym("x1^2"))) == "2*x1*tau^-1"


class TestSymbolBasics:
    def test_shift_moves_floor(self, sym):
        shifted = sym("x1").shift(-2)
        assert shifted.floor == -6
        assert shifted.coefficient(-2) == parse_poly("x1", 1)

    def test_equals_within_ignores_tail(self):
        precise = WkbSymbol(1, -4, {0: MultiPoly.one(1), -3: MultiPoly.x(1, 1)})
        coarse = WkbSymbol(1, -2, {0: MultiPoly.one(1)})
        assert precise.equals_within(coarse)
        assert precise != coarse

    def test_truncate_only_raises_floor(self, sym):
        p = sym("1 + tau^-3*x1")
        assert p.truncate(-10).floor == p.floor
        assert p.truncate(-2).coefficient(-3).is_zero()


class TestDehomogenize:
    def test_mixed_degree(self):
        symbol = dehomogenize({1: parse_poly("u1", 1)}, 2)
        assert symbol.coefficient(2) == parse_poly("u1", 1)

    def test_pure_xi(self):
        symbol = dehomogenize({0: parse_poly("u1^2", 1)}, 2)
        assert str(symbol) == "u1^2*tau^2"

    def test_sum_of_monomials(self):
        symbol = dehomogenize({0: parse_poly("u1 + x1*u1", 1)}, 1)
        assert symbol.coefficient(1) == parse_poly("x1*u1 + u1", 1)

    def test_rejects_inhomogeneous(self):
        with pytest.raises(NotHomogeneousError):
            dehomogenize({0: parse_poly("u1^2 + u1", 1)}, 2)

    def test_floor_defaults_to_degree(self):
        assert dehomogenize({0: parse_poly("u1", 1)}, 1).floor == 1
