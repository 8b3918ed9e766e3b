"""
Quantization of polynomial symplectic maps

Seeds X_i, U_i with the self-adjoint parts of f_i, g_i and removes the
commutator defects order by order. Images fixed by the anti-involution have
defects D with D* = -D, so nonzero defects first appear at an odd τ-order
-k with k >= 3. In target coordinates (y, v) they are the components of a
closed 2-form Ω, and a primitive β of Ω gives the corrections at order -(k-1):

    X_i += τ^{-(k-1)} β_{v_i}∘φ,    U_i -= τ^{-(k-1)} β_{y_i}∘φ

Each correction enters through its self-adjoint part, which has the same
leading coefficient because k-1 is even. The images stay self-adjoint, so
two quantizations of one map differ by Ad(P) with σ_0(P) = 1.
"""

from loguru import logger

from wkb_engine.errors import NotClosedFormError, NotSymplecticError, QuantizationError
from wkb_engine.polycore import MultiPoly, closed_two_form_primitive, pullback
from wkb_engine.quantize.automorphism import (
    AutomorphismRecord,
    nonzero_defects,
)
from wkb_engine.quantize.symplectic import (
    SymplecticMapSpec,
    check_symplectic,
    compute_primitive,
)
from wkb_engine.symbol import WkbSymbol, commutator, self_adjoint_part


def _defect_form(
    n: int, xs: list[WkbSymbol], us: list[WkbSymbol], order: int, inverse: tuple[MultiPoly, ...]
) -> tuple[list[list[MultiPoly]], dict[str, str]]:
    """Assemble Ω in target coordinates from the defect coefficients at `order`."""
    zero = MultiPoly.zero(n)
    omega = [[zero] * (2 * n) for _ in range(2 * n)]
    listing: dict[str, str] = {}

    def place(a: int, b: int, value: MultiPoly, name: str) -> None:
        if value.is_zero():
            return
        listing[name] = str(value)
        target = pullback(value, inverse)
        omega[a][b] = omega[a][b] + target
        omega[b][a] = omega[b][a] - target

    for i in range(n):
        for j in range(i + 1, n):
            place(n + i, n + j, commutator(xs[i], xs[j]).coefficient(order), f"[X{i + 1},X{j + 1}]")
            place(i, j, commutator(us[i], us[j]).coefficient(order), f"[U{i + 1},U{j + 1}]")
    for i in range(n):
        for j in range(n):
            # [X_i, U_j] + τ^{-1}δ_ij has no contribution at order <= -2 from the δ term
            value = commutator(xs[i], us[j]).coefficient(order)
            place(j, n + i, value, f"[X{i + 1},U{j + 1}]")
    return omega, listing


def quantize_map(spec: SymplecticMapSpec, depth: int) -> AutomorphismRecord:
    """
    Build generator images above a symplectic map with vanishing defects down to τ^{-depth}.

    Args:
        spec: Polynomial symplectic map with inverse
        depth: Window depth K

    Returns:
        Record whose commutator defects are identically zero within the window

    Raises:
        NotSymplecticError: If the map fails a bracket or inverse identity
        QuantizationError: If a defect form cannot be integrated or defects remain
    """
    verdict = check_symplectic(spec)
    if not verdict.passed:
        raise NotSymplecticError(verdict.failure or "unknown identity")
    n = spec.dim
    floor = -depth
    xs = [self_adjoint_part(WkbSymbol.from_poly(f, floor)) for f in spec.f]
    us = [self_adjoint_part(WkbSymbol.from_poly(g, floor)) for g in spec.g]

    for k in range(2, depth + 1):
        omega, listing = _defect_form(n, xs, us, -k, spec.inverse)
        if not listing:
            continue
        logger.debug(f"Correcting defects at tau-order {-k}: {sorted(listing)}")
        try:
            beta = closed_two_form_primitive(omega)
        except NotClosedFormError as e:
            raise QuantizationError(-k, listing) from e
        for i in range(n):
            xi = pullback(beta[n + i], spec.forward)
            eta = -pullback(beta[i], spec.forward)
            xs[i] = xs[i] + self_adjoint_part(WkbSymbol.from_poly(xi, floor, order=-(k - 1)))
            us[i] = us[i] + self_adjoint_part(WkbSymbol.from_poly(eta, floor, order=-(k - 1)))

    record = AutomorphismRecord(
        dim=n,
        c=spec.primitive_shift,
        x_images=tuple(xs),
        u_images=tuple(us),
        primitive=compute_primitive(spec),
        depth=depth,
        map_spec=spec,
    )
    remaining = nonzero_defects(record)
    if remaining:
        worst = max(defect.order_bound() for defect in remaining.values())
        raise QuantizationError(worst, {name: str(d) for name, d in remaining.items()})
    logger.info(f"Quantized dim-{n} map to depth {depth}")
    return record
