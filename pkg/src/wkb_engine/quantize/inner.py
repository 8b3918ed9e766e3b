"""
Recognition of inner automorphisms and inversion of records

A record above the identity map is Ad(P) within the window for an order-0
P with σ_0(P) = 1. P is found by gauge steps: the first deviation of the
images from (x, u), at order -k, is the Hamiltonian 1-form of some h, and
conjugating by 1 + τ^{-(k-1)} h removes it. The result is determined up to
a central factor, fixed by asking every negative-order coefficient to have
zero constant term.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from loguru import logger

from wkb_engine.errors import NotClosedFormError, NotInnerError
from wkb_engine.polycore import MultiPoly, poincare_primitive, pullback
from wkb_engine.quantize.automorphism import (
    AutomorphismRecord,
    ad_automorphism,
    compose_automorphisms,
)
from wkb_engine.quantize.quantizer import quantize_map
from wkb_engine.symbol import WkbSymbol, embed_scalar, invert, star_product

CENTRAL_AMBIGUITY_NOTE = (
    "P is unique up to a central factor in k_*; "
    "representative chosen with zero constant term in every negative-order coefficient"
)


@dataclass(frozen=True)
class InnerRecognition:
    """
    Result of recognize_inner.

    Attributes:
        inner: P with σ_0(P) = 1 in canonical normalization
        central_factor: The dim-0 factor ζ with inner = ζ ⋆ G, where G is the product
            of the gauge factors 1 + τ^{-(k-1)} h. Any other P' with Ad(P') equal
            to the record differs from inner by its own central factor, so ζ says
            nothing about a caller's P'; compare with P' directly
        translation: The record's c, invisible on symbols
        note: Description of the residual central ambiguity
    """

    inner: WkbSymbol
    central_factor: WkbSymbol
    translation: Fraction
    note: str = CENTRAL_AMBIGUITY_NOTE


def _deviation(images: list[WkbSymbol], generators: list[WkbSymbol], order: int) -> list[MultiPoly]:
    return [
        image.coefficient(order) - generator.coefficient(order)
        for image, generator in zip(images, generators)
    ]


def _canonical_factor(symbol: WkbSymbol) -> WkbSymbol:
    """ζ in k with ζ_0 = 1 such that ζ⋆P has zero constant term below order 0."""
    depth = -symbol.floor
    constants = [symbol.coefficient(-k).constant_term() for k in range(depth + 1)]
    zeta = [Fraction(1)]
    for k in range(1, depth + 1):
        zeta.append(-sum(zeta[a] * constants[k - a] for a in range(k)))
    return WkbSymbol(
        0, symbol.floor, {-k: MultiPoly.constant(0, value) for k, value in enumerate(zeta)}
    )


def recognize_inner(record: AutomorphismRecord) -> InnerRecognition:
    """
    Find P with Ad(P) equal to the record on generators within the window.

    Raises:
        NotInnerError: If the record is not above the identity, a deviation
            appears at order -1, a deviation form is not closed, or the
            reconstructed Ad(P) disagrees with the record
    """
    n = record.dim
    floor = record.floor
    generators = [WkbSymbol.x(n, i, floor) for i in range(1, n + 1)]
    generators += [WkbSymbol.u(n, i, floor) for i in range(1, n + 1)]
    images = list(record.images)

    for image in images:
        if image.order_bound() > 0:
            raise NotInnerError(image.order_bound(), "generator image has positive order")
    if any(not d.is_zero() for d in _deviation(images, generators, 0)):
        raise NotInnerError(0, "record is not above the identity map")

    inner = WkbSymbol.one(n, floor)
    for k in range(1, record.depth + 1):
        deviation = _deviation(images, generators, -k)
        if all(d.is_zero() for d in deviation):
            continue
        if k == 1:
            raise NotInnerError(-1, "deviation at order -1 needs a non-constant principal symbol")
        # dh = Σ ξ_i du_i - η_i dx_i for X_i = x_i + τ^{-k} ξ_i, U_i = u_i + τ^{-k} η_i
        one_form = [-eta for eta in deviation[n:]] + deviation[:n]
        try:
            hamiltonian = poincare_primitive(one_form)
        except NotClosedFormError as e:
            raise NotInnerError(-k, str(e)) from e
        gauge = WkbSymbol.one(n, floor) + WkbSymbol.from_poly(hamiltonian, floor, order=-(k - 1))
        gauge_inverse = invert(gauge)
        images = [
            star_product(star_product(gauge_inverse, image), gauge).truncate(floor)
            for image in images
        ]
        inner = star_product(inner, gauge).truncate(floor)
        logger.debug(f"Gauge step at tau-order {-k}: h = {hamiltonian}")

    factor = _canonical_factor(inner)
    inner = star_product(embed_scalar(factor, n), inner)
    check = ad_automorphism(inner)
    for mine, theirs in zip(check.images, record.images):
        if not mine.equals_within(theirs):
            raise NotInnerError(floor, "Ad(P) does not reproduce the generator images")
    return InnerRecognition(inner=inner, central_factor=factor, translation=record.c)


def invert_automorphism(record: AutomorphismRecord) -> AutomorphismRecord:
    """
    Inverse record within the window.

    Quantizes the inverse map to B0; A∘B0 lies above the identity, so it is
    Ad(P), and A^{-1} = B0∘Ad(P^{-1}). The primitive is -a∘φ so that the
    primitives of A∘A^{-1} and A^{-1}∘A vanish identically.
    """
    base = quantize_map(record.map_spec.inverted(), record.depth)
    recognition = recognize_inner(compose_automorphisms(record, base))
    correction = ad_automorphism(invert(recognition.inner))
    inverse = compose_automorphisms(base, correction)
    primitive = -pullback(record.primitive, record.map_spec.forward)
    return replace(inverse, primitive=primitive)
