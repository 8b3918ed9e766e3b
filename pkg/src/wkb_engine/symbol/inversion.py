"""
Inverses, square roots and series in the star algebra
"""

from fractions import Fraction

from loguru import logger

from wkb_engine.errors import NotInvertibleError, SquareRootError
from wkb_engine.polycore import rational_sqrt
from wkb_engine.symbol.involution import adjoint
from wkb_engine.symbol.wkb_symbol import WkbSymbol, order_and_principal, star_product


def _constant_principal(symbol: WkbSymbol, error: type[Exception]) -> tuple[int, Fraction]:
    info = order_and_principal(symbol)
    if info.order is None:
        raise error("principal symbol is zero")
    if not info.principal.is_constant():
        raise error(f"principal symbol {info.principal} is not a constant")
    return info.order, info.principal.constant_term()


def star_power(symbol: WkbSymbol, exponent: int) -> WkbSymbol:
    """P ⋆ P ⋆ ... ⋆ P; negative exponents go through the inverse."""
    if exponent < 0:
        return star_power(invert(symbol), -exponent)
    if exponent == 0:
        relative = symbol.floor - (symbol.order or 0)
        return WkbSymbol.one(symbol.dim, min(relative, 0))
    result = symbol
    for _ in range(exponent - 1):
        result = star_product(result, symbol)
    return result


def _power_series(nilpotent: WkbSymbol, weights: list[Fraction] | None = None) -> WkbSymbol:
    """Σ_k w_k N^k for N of order <= -1, stopping once the powers leave the window."""
    result = WkbSymbol.one(nilpotent.dim, nilpotent.floor)
    power = result
    k = 0
    while True:
        k += 1
        if weights is not None and k >= len(weights):
            break
        power = star_product(power, nilpotent).truncate(nilpotent.floor)
        if power.is_zero():
            break
        result = result + (power if weights is None else power.scale(weights[k]))
    return result


def invert(symbol: WkbSymbol) -> WkbSymbol:
    """
    Star inverse of a symbol whose principal symbol is a nonzero constant.

    Writes P = c τ^m (1 - N) and sums the Neumann series of N within the window.

    Raises:
        NotInvertibleError: If the principal symbol is zero or not constant
    """
    order, leading = _constant_principal(symbol, NotInvertibleError)
    normalized = symbol.shift(-order).scale(1 / leading)
    nilpotent = WkbSymbol.one(symbol.dim, normalized.floor) - normalized
    inverse = _power_series(nilpotent)
    logger.debug(f"Inverted symbol of order {order} down to floor {inverse.floor - order}")
    return inverse.shift(-order).scale(1 / leading)


def square_root(symbol: WkbSymbol, sign: int = 1) -> WkbSymbol:
    """
    Order-0 square root Q with Q ⋆ Q = P and σ_0(Q) = sign·sqrt(σ_0(P)).

    Solves q_{-k} = (p_{-k} - [Q_{>-k} ⋆ Q_{>-k}]_{-k}) / (2 q_0) order by order.

    Raises:
        SquareRootError: If σ_0(P) is not a positive rational square, the order
            is not 0, or the window below order 0 is empty
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    order, leading = _constant_principal(symbol, SquareRootError)
    if order != 0:
        raise SquareRootError(f"square root needs an order-0 symbol, got order {order}")
    root = rational_sqrt(leading)
    if root is None or root == 0:
        raise SquareRootError(f"principal symbol {leading} is not a positive rational square")
    if symbol.floor > 0:
        raise SquareRootError("truncation window is empty")
    lead = root * sign
    result = WkbSymbol.scalar(symbol.dim, lead, symbol.floor)
    for k in range(1, -symbol.floor + 1):
        square = star_product(result, result)
        residual = symbol.coefficient(-k) - square.coefficient(-k)
        if not residual.is_zero():
            correction = WkbSymbol(symbol.dim, symbol.floor, {-k: residual.scale(1 / (2 * lead))})
            result = result + correction
    return result


def star_exp(nilpotent: WkbSymbol) -> WkbSymbol:
    """exp(N) = Σ N^k / k! for a symbol of order <= -1."""
    if nilpotent.order is not None and nilpotent.order > -1:
        raise ValueError("star_exp needs a symbol of order at most -1")
    depth = max(0, -nilpotent.floor)
    weights = [Fraction(1)]
    for k in range(1, depth + 2):
        weights.append(weights[-1] / k)
    return _power_series(nilpotent, weights)


def unitarize(symbol: WkbSymbol) -> WkbSymbol:
    """
    Star-unitary representative P ⋆ (P* ⋆ P)^{-1/2} of an order-0 symbol with σ_0 = 1.

    The square root of the self-adjoint P*⋆P is self-adjoint, so the result U
    satisfies U ⋆ U* = 1.
    """
    gram = star_product(adjoint(symbol), symbol)
    return star_product(symbol, invert(square_root(gram, 1)))
