"""
Transpose anti-involution and star-unitary symbols

In a single chart with the flat volume form the anti-involution is the
coordinate transpose: it fixes every x_i and u_i and sends τ to -τ.
"""

from fractions import Fraction
from itertools import product
from math import factorial

from wkb_engine.polycore import MultiPoly, multi_derivative
from wkb_engine.symbol.wkb_symbol import WkbSymbol, order_and_principal, star_product


def adjoint(symbol: WkbSymbol) -> WkbSymbol:
    """
    σ(P*)(x,u,τ) = Σ_α τ^{-|α|}/α! ∂_u^α ∂_x^α [σ(P)(x,u,-τ)].
    """
    n = symbol.dim
    result: dict[int, MultiPoly] = {}
    for order, coefficient in symbol.items():
        flipped = coefficient if order % 2 == 0 else -coefficient
        budget = order - symbol.floor
        bounds = [
            max(0, min(coefficient.slot_degree(i), coefficient.slot_degree(n + i)))
            for i in range(n)
        ]
        for alpha in product(*(range(b + 1) for b in bounds)):
            size = sum(alpha)
            if size > budget:
                continue
            term = multi_derivative(flipped, alpha + alpha)
            if term.is_zero():
                continue
            weight = Fraction(1)
            for a in alpha:
                weight /= factorial(a)
            target = order - size
            term = term.scale(weight)
            result[target] = result[target] + term if target in result else term
    return WkbSymbol(n, symbol.floor, result)


def is_star_unitary(symbol: WkbSymbol) -> bool:
    """Order 0, σ_0 = 1 and P ⋆ P* = 1 within the window."""
    info = order_and_principal(symbol)
    if info.order != 0 or info.principal != MultiPoly.one(symbol.dim):
        return False
    gram = star_product(symbol, adjoint(symbol))
    return gram.equals_within(WkbSymbol.one(symbol.dim, gram.floor))


def self_adjoint_part(symbol: WkbSymbol) -> WkbSymbol:
    """(P + P*) / 2, the projection onto symbols fixed by the anti-involution."""
    return (symbol + adjoint(symbol)).scale(Fraction(1, 2))
