"""
Central part of a symbol and the commutant of the generators

The center of the symbol algebra consists of the τ-series with constant
coefficients; central_part splits that part off, and commutant_basis solves
"commutes with every x_i and u_i" as an exact linear system so the claim can
be checked rather than assumed.
"""

from collections import defaultdict
from fractions import Fraction
from itertools import product

import sympy
from loguru import logger

from wkb_engine.polycore import Exponent, MultiPoly
from wkb_engine.symbol.wkb_symbol import WkbSymbol, commutator


def central_part(symbol: WkbSymbol) -> tuple[WkbSymbol, WkbSymbol]:
    """
    Split each coefficient p_j into its constant term and the rest.

    Returns:
        (central, residual): a dim-0 symbol with the constants and a symbol of
        the original dimension with the non-constant remainder, both with the
        original floor
    """
    constants: dict[int, MultiPoly] = {}
    residual: dict[int, MultiPoly] = {}
    for order, coefficient in symbol.items():
        constants[order] = MultiPoly.constant(0, coefficient.constant_term())
        residual[order] = coefficient.without_constant()
    return (
        WkbSymbol(0, symbol.floor, constants),
        WkbSymbol(symbol.dim, symbol.floor, residual),
    )


def is_central(symbol: WkbSymbol) -> bool:
    """True when every coefficient is a constant."""
    return central_part(symbol)[1].is_zero()


def embed_scalar(scalar: WkbSymbol, dim: int) -> WkbSymbol:
    """View a dim-0 symbol as a central element of the dim-n algebra."""
    if scalar.dim != 0:
        raise ValueError(f"expected a dim-0 symbol, got dim {scalar.dim}")
    return WkbSymbol(
        dim,
        scalar.floor,
        {j: MultiPoly.constant(dim, p.constant_term()) for j, p in scalar.items()},
    )


def _monomials(dim: int, max_degree: int) -> list[Exponent]:
    exponents = [
        exponent
        for exponent in product(range(max_degree + 1), repeat=2 * dim)
        if sum(exponent) <= max_degree
    ]
    return sorted(exponents, key=lambda e: (sum(e), e))


def _components(columns: list[dict[tuple, Fraction]]) -> list[list[int]]:
    """Group unknowns that share an equation, in order of first unknown."""
    groups: list[tuple[set[tuple], list[int]]] = []
    for index, column in enumerate(columns):
        rows, members = set(column), [index]
        untouched = []
        for group_rows, group_members in groups:
            if group_rows & rows:
                rows |= group_rows
                members += group_members
            else:
                untouched.append((group_rows, group_members))
        groups = [*untouched, (rows, members)]
    return sorted((sorted(members) for _, members in groups), key=lambda members: members[0])


def _to_sympy(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def commutant_basis(dim: int, max_degree: int, depth: int) -> list[WkbSymbol]:
    """
    Basis of the symbols commuting with every x_i and u_i within the window.

    The search space is all symbols with coefficient degree <= max_degree on
    τ-orders 0, -1, ..., -depth. Each candidate basis element contributes one
    column of the linear map P ↦ ([P, x_i], [P, u_i]); the kernel is computed
    exactly with sympy, block by block. Commutators are evaluated one order
    deeper than the search space so the lowest candidates are still tested.

    Args:
        dim: Number of position variables
        max_degree: Bound on the total degree of each coefficient
        depth: Window depth; returned symbols carry floor -depth

    Returns:
        Symbols spanning the commutant inside the search space
    """
    check_floor = -depth - 1
    generators = [WkbSymbol.x(dim, i, check_floor) for i in range(1, dim + 1)]
    generators += [WkbSymbol.u(dim, i, check_floor) for i in range(1, dim + 1)]
    unknowns: list[tuple[int, Exponent]] = [
        (order, exponent)
        for order in range(0, -depth - 1, -1)
        for exponent in _monomials(dim, max_degree)
    ]
    columns: list[dict[tuple, Fraction]] = []
    for order, exponent in unknowns:
        candidate = WkbSymbol(dim, check_floor, {order: MultiPoly(dim, {exponent: 1})})
        column: dict[tuple, Fraction] = {}
        for g_index, generator in enumerate(generators):
            for j, coefficient in commutator(candidate, generator).items():
                for monomial, value in coefficient.items():
                    column[(g_index, j, monomial)] = value
        columns.append(column)

    basis: list[WkbSymbol] = []
    for group in _components(columns):
        rows = sorted({row for index in group for row in columns[index]})
        if rows:
            matrix = sympy.Matrix(
                [[_to_sympy(columns[index].get(row, Fraction(0))) for index in group]
                 for row in rows]
            )
            kernel = [
                [Fraction(int(v.p), int(v.q)) for v in vector] for vector in matrix.nullspace()
            ]
        else:
            kernel = [[Fraction(int(k == i)) for k in range(len(group))] for i in range(len(group))]
        for vector in kernel:
            terms: dict[int, dict[Exponent, Fraction]] = defaultdict(dict)
            for index, value in zip(group, vector):
                if value:
                    order, exponent = unknowns[index]
                    terms[order][exponent] = value
            basis.append(WkbSymbol(dim, -depth, {j: MultiPoly(dim, t) for j, t in terms.items()}))
    logger.debug(f"Commutant search over {len(unknowns)} unknowns found {len(basis)} elements")
    return basis
