"""
Liens: abstract descent data and their isomorphisms

A lien on the nerve is a family of algebra isomorphisms f_ij with sections
a_ijk such that f_ij∘f_jk = Ad(a_ijk)∘f_ik. Its defect on a quadruple,

    c_ijkl = (f_ij(a_jkl)⋆a_ijl)^{-1}⋆a_ijk⋆a_ikl,

is central, and the family of c's is a 3-cocycle:

    c_{0124}c_{0234} = c_{1234}c_{0134}c_{0123}.
"""

from __future__ import annotations

from collections.abc import Iterator
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from loguru import logger

from wkb_engine.descent.covering import (
    CoveringSpec,
    Pair,
    Quadruple,
    Triple,
    central_defect,
    prepare_covering,
    triple_defect,
    validate_covering,
)
from wkb_engine.descent.report import CheckReport, Verdict, VerificationSummary, flag
from wkb_engine.errors import CoveringInconsistentError
from wkb_engine.quantize import (
    AutomorphismRecord,
    ad_automorphism,
    apply_automorphism,
    compose_automorphisms,
    identity_record,
)
from wkb_engine.symbol import WkbSymbol, invert, star_product

Quintuple = tuple[str, str, str, str, str]


@dataclass
class LienData:
    """
    Isomorphisms f_ij (i before j) and sections a_ijk on a finite nerve.

    The isomorphisms are plain automorphism records; no star-unitarity is
    assumed of the sections.
    """

    charts: tuple[str, ...]
    depth: int
    dim: int
    isomorphisms: dict[Pair, AutomorphismRecord]
    sections: dict[Triple, WkbSymbol]

    def isomorphism(self, i: str, j: str) -> AutomorphismRecord:
        if i == j:
            return identity_record(self.dim, self.depth)
        try:
            return self.isomorphisms[(i, j)]
        except KeyError:
            raise CoveringInconsistentError(f"lien has no isomorphism f_{i}{j}") from None

    def section(self, triple: Triple) -> WkbSymbol:
        try:
            return self.sections[triple]
        except KeyError:
            raise CoveringInconsistentError(f"lien has no section a_{''.join(triple)}") from None

    def triples(self) -> Iterator[Triple]:
        return combinations(self.charts, 3)

    def quadruples(self) -> Iterator[Quadruple]:
        return combinations(self.charts, 4)

    def quintuples(self) -> Iterator[Quintuple]:
        return combinations(self.charts, 5)


@dataclass
class LienCocycle:
    """Central values c per quadruple and the 3-cocycle checks on quintuples."""

    values: dict[Quadruple, WkbSymbol]
    summary: VerificationSummary = field(default_factory=lambda: VerificationSummary(()))


def lien_from_covering(cov: CoveringSpec, workers: int = 4) -> LienData:
    """The lien of a covering: f_ij = Φ_ij and a_ijk = P_ijk."""
    validate_covering(cov)
    prepare_covering(cov)
    triples = list(cov.triples())
    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        defects = list(executor.map(lambda t: triple_defect(cov, *t), triples))
    return LienData(
        charts=cov.charts,
        depth=cov.depth,
        dim=cov.dim,
        isomorphisms={pair: cov.transition(*pair) for pair in cov.pairs()},
        sections={defect.indices: defect.inner for defect in defects},
    )


def _images_agree(first: AutomorphismRecord, second: AutomorphismRecord) -> bool:
    return all(a.equals_within(b) for a, b in zip(first.images, second.images))


def verify_lien_condition(lien: LienData) -> VerificationSummary:
    """Check f_ij∘f_jk = Ad(a_ijk)∘f_ik on generators for every triple."""
    reports = []
    for i, j, k in lien.triples():
        left = compose_automorphisms(lien.isomorphism(i, j), lien.isomorphism(j, k))
        right = compose_automorphisms(
            ad_automorphism(lien.section((i, j, k))), lien.isomorphism(i, k)
        )
        holds = _images_agree(left, right)
        reports.append(
            CheckReport(
                check="lien-condition",
                indices=(i, j, k),
                verdict=Verdict.PASS if holds else Verdict.FAIL,
            )
        )
    return VerificationSummary(tuple(reports))


def lien_quadruple_defect(lien: LienData, quadruple: Quadruple) -> WkbSymbol:
    """c_ijkl as a dim-0 symbol."""
    i, j, k, m = quadruple
    left = star_product(
        apply_automorphism(lien.isomorphism(i, j), lien.section((j, k, m))),
        lien.section((i, j, m)),
    )
    right = star_product(lien.section((i, j, k)), lien.section((i, k, m)))
    return central_defect("lien-defect", quadruple, star_product(invert(left), right))


def compute_lien_3cocycle(lien: LienData) -> LienCocycle:
    """
    Central defects per quadruple and the 3-cocycle identity per quintuple.

    Raises:
        NonCentralDefectError: If some quadruple defect is not central
    """
    values = {quadruple: lien_quadruple_defect(lien, quadruple) for quadruple in lien.quadruples()}
    reports: list[CheckReport] = []
    for quadruple, value in values.items():
        trivial = value.equals_within(WkbSymbol.one(0, value.floor))
        reports.append(
            CheckReport(
                check="lien-defect",
                indices=quadruple,
                verdict=Verdict.PASS,
                witness={"c": str(value), "trivial": flag(trivial)},
            )
        )
    for a, b, c, d, e in lien.quintuples():
        left = star_product(values[(a, b, c, e)], values[(a, c, d, e)])
        right = star_product(
            star_product(values[(b, c, d, e)], values[(a, b, d, e)]), values[(a, b, c, d)]
        )
        holds = left.equals_within(right)
        reports.append(
            CheckReport(
                check="3-cocycle",
                indices=(a, b, c, d, e),
                verdict=Verdict.PASS if holds else Verdict.FAIL,
                witness={"left": str(left), "right": str(right)},
            )
        )
    summary = VerificationSummary(tuple(reports))
    logger.info(f"Lien 3-cocycle over {len(lien.charts)} charts: {summary.headline}")
    return LienCocycle(values=values, summary=summary)


@dataclass
class LienIsoSpec:
    """
    An isomorphism between two liens on the same nerve.

    Attributes:
        u: Per-chart automorphisms u_i; unlisted charts use the identity
        sections: l_ij per pair (i before j); unlisted pairs use 1
    """

    u: dict[str, AutomorphismRecord]
    sections: dict[Pair, WkbSymbol]

    def chart_map(self, chart: str, dim: int, depth: int) -> AutomorphismRecord:
        record = self.u.get(chart)
        return identity_record(dim, depth) if record is None else record

    def section(self, i: str, j: str, dim: int, floor: int) -> WkbSymbol:
        """l_ij; 1 on the diagonal and for unlisted pairs."""
        symbol = self.sections.get((i, j)) if i != j else None
        return WkbSymbol.one(dim, floor) if symbol is None else symbol


def check_lien_isomorphism(
    source: LienData, target: LienData, iso: LienIsoSpec
) -> VerificationSummary:
    """
    Verify g_ij∘u_j = Ad(l_ij)∘u_i∘f_ij per pair and compute d per triple.

    d_ijk = (g_ij(l_jk)⋆l_ij⋆u_i(a_ijk))^{-1}⋆b_ijk⋆l_ik is central; the
    isomorphism is effective when every d is 1.

    Raises:
        CoveringInconsistentError: If the nerves, depths or dimensions differ
        NotInvertibleError: If some l_ij is not invertible
        NonCentralDefectError: If some d is not central
    """
    if source.charts != target.charts:
        raise CoveringInconsistentError(
            f"liens live on different nerves {list(source.charts)} and {list(target.charts)}"
        )
    if source.dim != target.dim:
        raise CoveringInconsistentError(f"lien dimensions differ: {source.dim} != {target.dim}")
    dim = source.dim
    depth = min(source.depth, target.depth)
    floor = -depth

    reports: list[CheckReport] = []
    for i, j in combinations(source.charts, 2):
        l_ij = iso.section(i, j, dim, floor)
        left = compose_automorphisms(target.isomorphism(i, j), iso.chart_map(j, dim, depth))
        right = compose_automorphisms(
            ad_automorphism(l_ij),
            compose_automorphisms(iso.chart_map(i, dim, depth), source.isomorphism(i, j)),
        )
        holds = _images_agree(left, right)
        reports.append(
            CheckReport(
                check="lien-iso-pair",
                indices=(i, j),
                verdict=Verdict.PASS if holds else Verdict.FAIL,
            )
        )
    for i, j, k in source.triples():
        transported = apply_automorphism(target.isomorphism(i, j), iso.section(j, k, dim, floor))
        image = apply_automorphism(iso.chart_map(i, dim, depth), source.section((i, j, k)))
        left = star_product(star_product(transported, iso.section(i, j, dim, floor)), image)
        right = star_product(target.section((i, j, k)), iso.section(i, k, dim, floor))
        d = central_defect("lien-iso-defect", (i, j, k), star_product(invert(left), right))
        trivial = d.equals_within(WkbSymbol.one(0, d.floor))
        reports.append(
            CheckReport(
                check="lien-iso-defect",
                indices=(i, j, k),
                verdict=Verdict.PASS,
                witness={"d": str(d), "trivial": flag(trivial)},
            )
        )
    summary = VerificationSummary(tuple(reports))
    logger.info(f"Lien isomorphism check: {summary.headline}")
    return summary
