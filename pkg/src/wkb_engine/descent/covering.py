"""
Čech descent data for quantized symplectic transformations

A covering is a finite ordered set of charts with transition records Φ_ij
(acting from chart j to chart i). All charts share the global polynomial
model, so restriction to overlaps is the identity. On a triple overlap

    Φ_ij∘Φ_jk = Ad(P_ijk)∘δ_c∘Φ_ik

and on a quadruple overlap the defects satisfy

    P_ijk⋆P_ikl = ζ⋆Φ_ij(P_jkl)⋆P_ijl,    c_ijk + c_ikl = c_jkl + c_ijl

with ζ central.
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from loguru import logger

from wkb_engine.errors import CoveringInconsistentError, NonCentralDefectError
from wkb_engine.descent.report import CheckReport, Verdict, VerificationSummary, flag
from wkb_engine.polycore import format_rational
from wkb_engine.quantize import (
    AutomorphismRecord,
    apply_automorphism,
    check_symplectic,
    compose_automorphisms,
    identity_record,
    invert_automorphism,
    nonzero_defects,
    recognize_inner,
)
from wkb_engine.symbol import (
    WkbSymbol,
    adjoint,
    central_part,
    embed_scalar,
    invert,
    star_product,
)

Pair = tuple[str, str]
Triple = tuple[str, str, str]
Quadruple = tuple[str, str, str, str]


@dataclass
class CoveringSpec:
    """
    Charts, transition records and optional central twists of triple defects.

    Attributes:
        charts: Chart ids in nerve order
        depth: Window depth K
        transitions: Φ_ij keyed by (i, j)
        twists: dim-0 central factors multiplied into P_ijk, keyed by (i, j, k)
    """

    charts: tuple[str, ...]
    depth: int
    transitions: dict[Pair, AutomorphismRecord]
    twists: dict[Triple, WkbSymbol] = field(default_factory=dict)
    _inverses: dict[Pair, AutomorphismRecord] = field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        for record in self.transitions.values():
            return record.dim
        raise CoveringInconsistentError("covering has no transitions")

    def position(self, chart: str) -> int:
        return self.charts.index(chart)

    def transition(self, i: str, j: str) -> AutomorphismRecord:
        """Φ_ij; the identity on the diagonal, the inverse of Φ_ji when only that is listed."""
        if (i, j) in self.transitions:
            return self.transitions[(i, j)]
        if i == j:
            return identity_record(self.dim, self.depth)
        if (j, i) in self.transitions:
            return self.inverse(j, i)
        raise CoveringInconsistentError(f"no transition between charts {i} and {j}")

    def inverse(self, i: str, j: str) -> AutomorphismRecord:
        """Φ_ij^{-1}, computed once."""
        if (i, j) not in self._inverses:
            self._inverses[(i, j)] = invert_automorphism(self.transition(i, j))
        return self._inverses[(i, j)]

    def pairs(self) -> Iterator[Pair]:
        return combinations(self.charts, 2)

    def triples(self) -> Iterator[Triple]:
        return combinations(self.charts, 3)

    def quadruples(self) -> Iterator[Quadruple]:
        return combinations(self.charts, 4)

    def twist(self, triple: Triple) -> WkbSymbol | None:
        return self.twists.get(triple)


@dataclass(frozen=True)
class TripleDefect:
    """
    Defect data of a triple overlap.

    Attributes:
        indices: (i, j, k)
        inner: P_ijk in chart i, canonically normalized, twist included
        c: Translation constant c_ijk
        central_residual: dim-0 factor used by the canonical normalization
    """

    indices: Triple
    inner: WkbSymbol
    c: Fraction
    central_residual: WkbSymbol

    @property
    def trivial(self) -> bool:
        one = WkbSymbol.one(self.inner.dim, self.inner.floor)
        return self.c == 0 and self.inner.equals_within(one)


def validate_covering(cov: CoveringSpec) -> None:
    """
    Structural checks: known charts, identity diagonals, symplectic maps, zero defects.

    Raises:
        CoveringInconsistentError: On the first violated precondition
    """
    if len(set(cov.charts)) != len(cov.charts):
        raise CoveringInconsistentError(f"duplicate chart ids in {list(cov.charts)}")
    dims = {record.dim for record in cov.transitions.values()}
    if len(dims) > 1:
        raise CoveringInconsistentError(f"transitions have mixed dimensions {sorted(dims)}")
    for (i, j), record in cov.transitions.items():
        for chart in (i, j):
            if chart not in cov.charts:
                raise CoveringInconsistentError(
                    f"transition ({i}, {j}) names unknown chart {chart}"
                )
        if i == j and not record.is_above_identity():
            raise CoveringInconsistentError(f"transition ({i}, {i}) is not the identity")
        verdict = check_symplectic(record.map_spec)
        if not verdict.passed:
            raise CoveringInconsistentError(f"transition ({i}, {j}): {verdict.failure}")
        defects = nonzero_defects(record)
        if defects:
            raise CoveringInconsistentError(
                f"transition ({i}, {j}) has commutator defects {sorted(defects)}"
            )
    for triple, twist in cov.twists.items():
        if any(chart not in cov.charts for chart in triple):
            raise CoveringInconsistentError(f"twist {triple} names an unknown chart")
        if twist.dim != 0:
            raise CoveringInconsistentError(f"twist {triple} must be a dim-0 symbol")


def prepare_covering(cov: CoveringSpec) -> None:
    """Fill in every Φ_ij and Φ_ij^{-1} with i before j so parallel checks only read."""
    for i, j in cov.pairs():
        cov.transition(i, j)
        cov.inverse(i, j)


def triple_defect(cov: CoveringSpec, i: str, j: str, k: str) -> TripleDefect:
    """
    Compute (P_ijk, c_ijk) from Φ_ij∘Φ_jk∘Φ_ik^{-1} = Ad(P_ijk).

    Raises:
        CoveringInconsistentError: If the composite is not above the identity
            or the translation constant is not a constant
        NotInnerError: If the composite is not inner within the window
    """
    composite = compose_automorphisms(cov.transition(i, j), cov.transition(j, k))
    target = cov.transition(i, k)
    defect = compose_automorphisms(composite, cov.inverse(i, k))
    if not defect.is_above_identity():
        raise CoveringInconsistentError(
            f"Φ_{i}{j}∘Φ_{j}{k} and Φ_{i}{k} lie above different symplectic maps"
        )
    recognition = recognize_inner(defect)
    inner = recognition.inner
    twist = cov.twist((i, j, k))
    if twist is not None:
        inner = star_product(inner, embed_scalar(twist, inner.dim))
    c_expression = composite.primitive - target.primitive
    if not c_expression.is_constant():
        raise CoveringInconsistentError(
            f"c_{i}{j}{k} = {c_expression} is not constant; primitives are inconsistent"
        )
    logger.debug(f"Triple ({i}, {j}, {k}): P = {inner}, c = {c_expression.constant_term()}")
    return TripleDefect(
        indices=(i, j, k),
        inner=inner,
        c=c_expression.constant_term(),
        central_residual=recognition.central_factor,
    )


def triple_report(defect: TripleDefect) -> CheckReport:
    return CheckReport(
        check="triple",
        indices=defect.indices,
        verdict=Verdict.PASS,
        witness={
            "inner": str(defect.inner),
            "c": format_rational(defect.c),
            "trivial": flag(defect.trivial),
        },
    )


def central_defect(check: str, indices: tuple[str, ...], symbol: WkbSymbol) -> WkbSymbol:
    """The dim-0 central part of a defect that must be central."""
    central, residual = central_part(symbol)
    if not residual.is_zero():
        raise NonCentralDefectError(check, indices, str(residual))
    return central


def is_star_unitary_scalar(scalar: WkbSymbol) -> bool:
    """ζ(τ)⋆ζ(-τ) = 1 for a dim-0 symbol."""
    product = star_product(scalar, adjoint(scalar))
    return product.equals_within(WkbSymbol.one(0, product.floor))


def verify_w_cocycle(
    cov: CoveringSpec, quadruple: Quadruple, defects: Mapping[Triple, TripleDefect]
) -> CheckReport:
    """
    Check P_ijk⋆P_ikl against Φ_ij(P_jkl)⋆P_ijl and the additive c identity.

    ζ = (Φ_ij(P_jkl)⋆P_ijl)^{-1}⋆(P_ijk⋆P_ikl) must be central; ζ = 1 is
    reported, not required.

    Raises:
        NonCentralDefectError: If ζ has a non-constant part
    """
    i, j, k, m = quadruple
    p_ijk, p_ikl = defects[(i, j, k)], defects[(i, k, m)]
    p_jkl, p_ijl = defects[(j, k, m)], defects[(i, j, m)]
    left = star_product(apply_automorphism(cov.transition(i, j), p_jkl.inner), p_ijl.inner)
    right = star_product(p_ijk.inner, p_ikl.inner)
    zeta = central_defect("w-cocycle", quadruple, star_product(invert(left), right))
    zeta_trivial = zeta.equals_within(WkbSymbol.one(0, zeta.floor))
    unitary = is_star_unitary_scalar(zeta)
    additive = p_ijk.c + p_ikl.c - p_jkl.c - p_ijl.c
    if not zeta_trivial:
        logger.warning(f"Quadruple {quadruple}: central defect ζ = {zeta}")
    return CheckReport(
        check="w-cocycle",
        indices=quadruple,
        verdict=Verdict.PASS if additive == 0 else Verdict.FAIL,
        witness={
            "zeta": str(zeta),
            "zeta_star_unitary": flag(unitary),
            "c_identity": f"c_ijk + c_ikl - c_jkl - c_ijl = {format_rational(additive)}",
            "trivial": flag(zeta_trivial),
        },
    )


def verify_covering(cov: CoveringSpec, workers: int = 4) -> VerificationSummary:
    """
    Run every triple and quadruple check of a covering.

    Checks are independent and run on a thread pool; results keep the nerve
    order of the index tuples.

    Raises:
        CoveringInconsistentError: If the covering fails structural checks
        NonCentralDefectError: If a quadruple defect is not central
    """
    validate_covering(cov)
    prepare_covering(cov)
    triples = list(cov.triples())
    quadruples = list(cov.quadruples())
    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        defects = list(executor.map(lambda t: triple_defect(cov, *t), triples))
        by_index = {defect.indices: defect for defect in defects}
        cocycles = list(executor.map(lambda q: verify_w_cocycle(cov, q, by_index), quadruples))
    summary = VerificationSummary(tuple(triple_report(d) for d in defects) + tuple(cocycles))
    logger.info(
        f"Verified covering with {len(cov.charts)} charts: {len(triples)} triples, "
        f"{len(quadruples)} quadruples; {summary.headline}"
    )
    return summary


def coboundary_covering(
    chart_records: Mapping[str, AutomorphismRecord], depth: int | None = None
) -> CoveringSpec:
    """
    Covering with Φ_ij = Ψ_i∘Ψ_j^{-1} built from per-chart records.

    All descent defects of such a covering are trivial.
    """
    charts = tuple(chart_records)
    if not charts:
        raise CoveringInconsistentError("coboundary covering needs at least one chart")
    if depth is None:
        depth = min(record.depth for record in chart_records.values())
    inverses = {chart: invert_automorphism(record) for chart, record in chart_records.items()}
    transitions = {
        (i, j): compose_automorphisms(chart_records[i], inverses[j])
        for i, j in combinations(charts, 2)
    }
    return CoveringSpec(charts=charts, depth=depth, transitions=transitions)
