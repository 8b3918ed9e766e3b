"""
Descent Module

Čech descent-data verification: triple and quadruple defects of transition
records, the lien 3-cocycle and isomorphisms of liens.
"""

from wkb_engine.descent.covering import (
    CoveringSpec,
    TripleDefect,
    coboundary_covering,
    is_star_unitary_scalar,
    prepare_covering,
    triple_defect,
    validate_covering,
    verify_covering,
    verify_w_cocycle,
)
from wkb_engine.descent.lien import (
    LienCocycle,
    LienData,
    LienIsoSpec,
    check_lien_isomorphism,
    compute_lien_3cocycle,
    lien_from_covering,
    lien_quadruple_defect,
    verify_lien_condition,
)
from wkb_engine.descent.report import CheckReport, Verdict, VerificationSummary

__all__ = [
    # Coverings
    "CoveringSpec",
    "TripleDefect",
    "validate_covering",
    "prepare_covering",
    "triple_defect",
    "verify_w_cocycle",
    "verify_covering",
    "coboundary_covering",
    "is_star_unitary_scalar",

    # Liens
    "LienData",
    "LienCocycle",
    "LienIsoSpec",
    "lien_from_covering",
    "verify_lien_condition",
    "lien_quadruple_defect",
    "compute_lien_3cocycle",
    "check_lien_isomorphism",

    # Reports
    "CheckReport",
    "Verdict",
    "VerificationSummary",
]
