"""
Polycore Module

Exact rational arithmetic and multivariate polynomial calculus: derivatives,
Poisson bracket, substitution and primitives of closed forms.
"""

from wkb_engine.polycore.forms import (
    check_closed_one_form,
    check_closed_two_form,
    closed_two_form_primitive,
    poincare_primitive,
)
from wkb_engine.polycore.polynomial import (
    Exponent,
    MultiPoly,
    Variable,
    derivative_slot,
    exterior_derivative,
    multi_derivative,
    partial_derivative,
    poisson_bracket,
    poly_arith,
    pullback,
    slot_variable,
)
from wkb_engine.polycore.rational import (
    Rational,
    format_rational,
    parse_rational,
    rational_sqrt,
    to_rational,
)

__all__ = [
    # Scalars
    "Rational",
    "to_rational",
    "parse_rational",
    "format_rational",
    "rational_sqrt",

    # Polynomials
    "Exponent",
    "MultiPoly",
    "Variable",
    "slot_variable",
    "poly_arith",
    "partial_derivative",
    "derivative_slot",
    "multi_derivative",
    "poisson_bracket",
    "exterior_derivative",
    "pullback",

    # Forms
    "poincare_primitive",
    "closed_two_form_primitive",
    "check_closed_one_form",
    "check_closed_two_form",
]
