"""
Bridge from homogeneous microdifferential symbols to WKB symbols

A homogeneous term p_j(x; ξ, τ) of degree j in (ξ, τ) becomes p̃_j(x; u) τ^j
with u = ξ τ^{-1}, that is p̃_j(x; u) = p_j(x; u, 1).
"""

from collections.abc import Mapping

from wkb_engine.errors import NotHomogeneousError
from wkb_engine.polycore import MultiPoly
from wkb_engine.symbol.wkb_symbol import WkbSymbol

HomogeneousPoly = Mapping[int, MultiPoly]
"""τ-exponent ↦ coefficient in (x, ξ), with ξ_i stored in the u_i slots."""


def dehomogenize(hpoly: HomogeneousPoly, degree: int, floor: int | None = None) -> WkbSymbol:
    """
    Dehomogenize a polynomial in (x, ξ, τ) of degree `degree` in (ξ, τ).

    Args:
        hpoly: Map from τ-exponent to the (x, ξ) coefficient polynomial
        degree: Homogeneity degree j
        floor: Reliability floor of the result (defaults to j)

    Returns:
        The single-term symbol p̃_j(x, u) τ^j

    Raises:
        NotHomogeneousError: If some monomial has ξ-degree + τ-exponent != j
            or a negative τ-exponent
    """
    dims = {coefficient.dim for coefficient in hpoly.values()}
    if len(dims) > 1:
        raise NotHomogeneousError(f"coefficients have mixed dimensions {sorted(dims)}")
    dim = dims.pop() if dims else 0
    total = MultiPoly.zero(dim)
    for tau_exponent, coefficient in hpoly.items():
        for exponent, _ in coefficient.items():
            xi_degree = sum(exponent[dim:])
            if tau_exponent < 0 or xi_degree + tau_exponent != degree:
                raise NotHomogeneousError(
                    f"monomial with xi-degree {xi_degree} and tau-exponent {tau_exponent} "
                    f"is not of degree {degree}"
                )
        total = total + coefficient
    return WkbSymbol(dim, degree if floor is None else floor, {degree: total})
