"""
Canonical text form

Symbols print term by term in descending τ-order; inside each order the
monomials follow graded-lexicographic order (higher total degree first, then
higher powers of x1, ..., xn, u1, ..., un). Coefficients print as num/den
with "/1" suppressed and unit coefficients omitted:

    x1*u1 + tau^-1
"""

from __future__ import annotations

from fractions import Fraction
from typing import TYPE_CHECKING

from wkb_engine.polycore.polynomial import Exponent, MultiPoly, slot_variable
from wkb_engine.polycore.rational import format_rational

if TYPE_CHECKING:
    from wkb_engine.symbol import WkbSymbol


def graded_lex_key(exponent: Exponent) -> tuple:
    return (-sum(exponent), tuple(-e for e in exponent))


def _factor_text(exponent: Exponent, dim: int, tau: int) -> list[str]:
    factors = []
    for slot, power in enumerate(exponent):
        if power:
            name = str(slot_variable(slot, dim))
            factors.append(name if power == 1 else f"{name}^{power}")
    if tau:
        factors.append("tau" if tau == 1 else f"tau^{tau}")
    return factors


def _terms(poly: MultiPoly, tau: int = 0) -> list[tuple[Fraction, str]]:
    """(coefficient, monomial text) pairs in canonical order."""
    ordered = sorted(poly.items(), key=lambda item: graded_lex_key(item[0]))
    return [(value, "*".join(_factor_text(e, poly.dim, tau))) for e, value in ordered]


def _join(terms: list[tuple[Fraction, str]]) -> str:
    if not terms:
        return "0"
    parts: list[str] = []
    for index, (value, monomial) in enumerate(terms):
        magnitude = abs(value)
        if not monomial:
            body = format_rational(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = f"{format_rational(magnitude)}*{monomial}"
        if index == 0:
            parts.append(f"-{body}" if value < 0 else body)
        else:
            parts.append(f"{'-' if value < 0 else '+'} {body}")
    return " ".join(parts)


def format_poly(poly: MultiPoly) -> str:
    """Canonical text of a polynomial."""
    return _join(_terms(poly))


def format_symbol(symbol: WkbSymbol) -> str:
    """Canonical text of a WkbSymbol (terms by descending τ-order)."""
    terms: list[tuple[Fraction, str]] = []
    for order, coefficient in symbol.items():
        terms.extend(_terms(coefficient, order))
    return _join(terms)
