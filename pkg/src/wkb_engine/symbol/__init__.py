"""
Symbol Module

The truncated WKB-symbol algebra: star product, order and principal symbol,
inversion, square roots, the transpose anti-involution and the center.
"""

from wkb_engine.symbol.center import (
    central_part,
    commutant_basis,
    embed_scalar,
    is_central,
)
from wkb_engine.symbol.homogeneous import HomogeneousPoly, dehomogenize
from wkb_engine.symbol.inversion import (
    invert,
    square_root,
    star_exp,
    star_power,
    unitarize,
)
from wkb_engine.symbol.involution import adjoint, is_star_unitary, self_adjoint_part
from wkb_engine.symbol.wkb_symbol import (
    OrderInfo,
    WkbSymbol,
    commutator,
    order_and_principal,
    star_floor,
    star_product,
)

__all__ = [
    # Types
    "WkbSymbol",
    "OrderInfo",
    "HomogeneousPoly",

    # Product structure
    "star_product",
    "star_floor",
    "commutator",
    "order_and_principal",

    # Inversion and series
    "invert",
    "square_root",
    "star_power",
    "star_exp",
    "unitarize",

    # Anti-involution
    "adjoint",
    "is_star_unitary",
    "self_adjoint_part",

    # Center
    "central_part",
    "is_central",
    "embed_scalar",
    "commutant_basis",

    # Homogeneous bridge
    "dehomogenize",
]
