"""
Hypothesis strategies for polynomials and truncated symbols
"""

import hypothesis.strategies as st

from wkb_engine.polycore import MultiPoly
from wkb_engine.symbol import WkbSymbol, self_adjoint_part, unitarize

coefficients = st.fractions(min_value=-3, max_value=3, max_denominator=4)


@st.composite
def exponents(draw, dim: int, max_degree: int):
    budget = max_degree
    exponent = []
    for _ in range(2 * dim):
        power = draw(st.integers(min_value=0, max_value=budget))
        budget -= power
        exponent.append(power)
    return tuple(exponent)


@st.composite
def polys(draw, dim: int = 1, max_degree: int = 3, max_terms: int = 4):
    terms = draw(st.dictionaries(exponents(dim, max_degree), coefficients, max_size=max_terms))
    return MultiPoly(dim, terms)


@st.composite
def symbols(draw, dim: int = 1, floor: int = -6, max_degree: int = 2):
    orders = draw(st.lists(st.integers(min_value=floor, max_value=1), max_size=3, unique=True))
    return WkbSymbol(dim, floor, {j: draw(polys(dim, max_degree, 3)) for j in orders})


@st.composite
def invertible_symbols(draw, dim: int = 1, floor: int = -5):
    """Order 0 with a nonzero constant principal symbol."""
    lead = draw(coefficients.filter(bool))
    terms = {0: MultiPoly.constant(dim, lead)}
    for k in (1, 2):
        terms[-k] = draw(polys(dim, 2, 2))
    return WkbSymbol(dim, floor, terms)


@st.composite
def symbol_tuples(draw, count: int, max_degree: int = 3, dims=(1, 2)):
    """`count` symbols of one dimension drawn from `dims`."""
    dim = draw(st.sampled_from(dims))
    return tuple(draw(symbols(dim, max_degree=max_degree)) for _ in range(count))


@st.composite
def poly_tuples(draw, count: int, max_degree: int = 3, dims=(1, 2)):
    dim = draw(st.sampled_from(dims))
    return tuple(draw(polys(dim, max_degree)) for _ in range(count))


@st.composite
def self_adjoint_symbols(draw, dim: int = 1, floor: int = -4):
    """(P + P*)/2 for an order-0 P with σ_0 = 1 and degree <= 2 lower terms."""
    terms = {0: MultiPoly.one(dim)}
    for k in (1, 2):
        terms[-k] = draw(polys(dim, 2, 3))
    return self_adjoint_part(WkbSymbol(dim, floor, terms))


@st.composite
def star_unitary_symbols(draw, dim: int = 1, floor: int = -4):
    terms = {0: MultiPoly.one(dim)}
    for k in (1, 2):
        terms[-k] = draw(polys(dim, 2, 2))
    return unitarize(WkbSymbol(dim, floor, terms))
