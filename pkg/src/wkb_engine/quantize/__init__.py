"""
Quantize Module

Quantized symplectic transformations: symplectic map specs, the contact-lift
primitive, generator images with canonical commutation relations, and the
algebra of automorphism records.
"""

from wkb_engine.quantize.automorphism import (
    AutomorphismRecord,
    ad_automorphism,
    apply_automorphism,
    commutator_defects,
    compose_automorphisms,
    identity_record,
    nonzero_defects,
    records_equal_within,
)
from wkb_engine.quantize.inner import (
    CENTRAL_AMBIGUITY_NOTE,
    InnerRecognition,
    invert_automorphism,
    recognize_inner,
)
from wkb_engine.quantize.quantizer import quantize_map
from wkb_engine.quantize.symplectic import (
    SymplecticMapSpec,
    SymplecticVerdict,
    check_symplectic,
    compose_specs,
    compute_primitive,
)

__all__ = [
    # Map specs
    "SymplecticMapSpec",
    "SymplecticVerdict",
    "check_symplectic",
    "compute_primitive",
    "compose_specs",

    # Records
    "AutomorphismRecord",
    "identity_record",
    "apply_automorphism",
    "compose_automorphisms",
    "ad_automorphism",
    "commutator_defects",
    "nonzero_defects",
    "records_equal_within",

    # Construction and recognition
    "quantize_map",
    "recognize_inner",
    "invert_automorphism",
    "InnerRecognition",
    "CENTRAL_AMBIGUITY_NOTE",
]
