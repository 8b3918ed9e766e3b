"""
WKB Engine

Exact-arithmetic computer algebra for truncated WKB operator symbols:
star products with a central parameter tau, inversion and square roots,
quantization of polynomial symplectic maps as algebra automorphisms, and
verification of the descent data used to glue the resulting algebras.

Example:
    >>> from wkb_engine import WkbSymbol, star_product
    >>>
    >>> u, x = WkbSymbol.u(1, 1, -6), WkbSymbol.x(1, 1, -6)
    >>> print(star_product(u, x))
    x1*u1 + tau^-1
"""

__version__ = "0.1.0"
__license__ = "MIT"

# Import main classes for easy access
from wkb_engine.descent import (
    CoveringSpec,
    LienData,
    VerificationSummary,
    compute_lien_3cocycle,
    verify_covering,
)
from wkb_engine.errors import WkbEngineError
from wkb_engine.parsers import format_symbol, parse_symbol
from wkb_engine.polycore import MultiPoly
from wkb_engine.quantize import (
    AutomorphismRecord,
    SymplecticMapSpec,
    invert_automorphism,
    quantize_map,
    recognize_inner,
)
from wkb_engine.symbol import WkbSymbol, invert, square_root, star_product
from wkb_engine.utils import load_config, setup_logger

__all__ = [
    # Version info
    "__version__",
    "__license__",

    # Symbols
    "MultiPoly",
    "WkbSymbol",
    "star_product",
    "invert",
    "square_root",
    "parse_symbol",
    "format_symbol",

    # Quantization
    "SymplecticMapSpec",
    "AutomorphismRecord",
    "quantize_map",
    "recognize_inner",
    "invert_automorphism",

    # Descent
    "CoveringSpec",
    "LienData",
    "VerificationSummary",
    "verify_covering",
    "compute_lien_3cocycle",

    # Errors
    "WkbEngineError",

    # Utils
    "load_config",
    "setup_logger",
]
