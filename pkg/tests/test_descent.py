"""
Tests for covering verification: triple defects and the quadruple identities
"""

from fractions import Fraction

import pytest

from tests.conftest import build_spec
from wkb_engine.descent import (
    CoveringSpec,
    coboundary_covering,
    is_star_unitary_scalar,
    triple_defect,
    validate_covering,
    verify_covering,
)
from wkb_engine.errors import CoveringInconsistentError
from wkb_engine.polycore import MultiPoly
from wkb_engine.quantize import AutomorphismRecord, SymplecticMapSpec, identity_record, quantize_map
from wkb_engine.symbol import WkbSymbol, star_exp

pytestmark = [pytest.mark.integration, pytest.mark.descent]

DEPTH = 3


def identity_covering(charts: int, twists: dict | None = None) -> CoveringSpec:
    names = tuple(str(i) for i in range(charts))
    transitions = {
        (names[i], names[j]): identity_record(1, DEPTH)
        for i in range(charts)
        for j in range(i + 1, charts)
    }
    return CoveringSpec(charts=names, depth=DEPTH, transitions=transitions, twists=twists or {})


def central_series() -> WkbSymbol:
    """exp(τ^{-1}) in the dim-0 algebra: central, star-unitary and not 1."""
    return star_exp(WkbSymbol.tau_power(0, -1, -DEPTH))


class TestTripleDefects:
    def test_identity_transitions(self):
        summary = verify_covering(identity_covering(3))
        assert summary.passed and summary.trivial
        assert summary.headline == "all defects trivial"

    def test_coboundary_covering(self, shear, rotation, identity):
        charts = {
            "a": quantize_map(shear, DEPTH),
            "b": quantize_map(rotation, DEPTH),
            "c": quantize_map(identity, DEPTH),
        }
        cov = coboundary_covering(charts)
        defect = triple_defect(cov, "a", "b", "c")
        assert defect.trivial
        assert defect.c == 0
        assert verify_covering(cov).headline == "all defects trivial"

    def test_primitive_shifts_telescope(self):
        s01, s12, s02 = Fraction(1, 2), Fraction(3), Fraction(-2)
        transitions = {
            ("0", "1"): quantize_map(build_spec(["u1", "-x1"], ["-u1", "x1"], shift=s01), DEPTH),
            ("1", "2"): quantize_map(build_spec(["u1", "-x1"], ["-u1", "x1"], shift=s12), DEPTH),
            ("0", "2"): quantize_map(build_spec(["-x1", "-u1"], ["-x1", "-u1"], shift=s02), DEPTH),
        }
        cov = CoveringSpec(charts=("0", "1", "2"), depth=DEPTH, transitions=transitions)
        defect = triple_defect(cov, "0", "1", "2")
        assert defect.c == s01 + s12 - s02
        assert defect.inner.equals_within(WkbSymbol.one(1, -DEPTH))
        summary = verify_covering(cov)
        assert summary.passed and not summary.trivial
        assert summary.reports[0].witness["c"] == "11/2"

    def test_unlisted_pair_uses_inverse(self, rotation):
        record = quantize_map(rotation, DEPTH)
        cov = CoveringSpec(charts=("0", "1"), depth=DEPTH, transitions={("1", "0"): record})
        inverse = cov.transition("0", "1")
        assert [str(image) for image in inverse.images] == ["-u1", "x1"]


class TestQuadrupleDefects:
    def test_four_chart_coboundary(self, shear, rotation, identity):
        records = [quantize_map(spec, DEPTH) for spec in (shear, rotation, identity, shear)]
        cov = coboundary_covering({str(i): record for i, record in enumerate(records)})
        summary = verify_covering(cov, workers=2)
        checks = [report.check for report in summary.reports]
        assert checks.count("triple") == 4 and checks.count("w-cocycle") == 1
        assert summary.trivial
        assert summary.reports[-1].witness["c_identity"] == "c_ijk + c_ikl - c_jkl - c_ijl = 0"

    @pytest.mark.slow
    def test_nonlinear_three_chart_coboundary(self, shear, u_shear):
        records = {
            "0": quantize_map(shear, DEPTH),
            "1": quantize_map(u_shear, DEPTH),
            "2": quantize_map(shear, DEPTH),
        }
        cov = coboundary_covering(records)
        defect = triple_defect(cov, "0", "1", "2")
        assert defect.trivial
        assert defect.inner.equals_within(WkbSymbol.one(1, -DEPTH))
        assert verify_covering(cov).headline == "all defects trivial"

    @pytest.mark.slow
    def test_nonlinear_four_chart_coboundary(self, shear, u_shear, rotation):
        specs = (shear, u_shear, rotation, shear)
        records = {str(i): quantize_map(spec, DEPTH) for i, spec in enumerate(specs)}
        summary = verify_covering(coboundary_covering(records), workers=2)
        assert summary.headline == "all defects trivial"
        cocycle = [report for report in summary.reports if report.check == "w-cocycle"]
        assert [report.witness["zeta"] for report in cocycle] == ["1"]
        assert all(
            report.witness["c"] == "0" for report in summary.reports if report.check == "triple"
        )

    def test_central_twist(self):
        zeta = central_series()
        summary = verify_covering(identity_covering(4, {("0", "1", "2"): zeta}))
        assert summary.passed
        assert not summary.trivial
        cocycle = [report for report in summary.reports if report.check == "w-cocycle"]
        assert [report.indices for report in cocycle] == [("0", "1", "2", "3")]
        witness = cocycle[0].witness
        assert witness["zeta"] == str(zeta)
        assert witness["zeta_star_unitary"] == "true"
        assert witness["trivial"] == "false"
        assert summary.headline == "all checks passed; 2 non-trivial central defects"

    def test_shifted_quadruple_keeps_additive_identity(self):
        shifts = {
            ("0", "1"): 1,
            ("0", "2"): 5,
            ("0", "3"): 3,
            ("1", "2"): 2,
            ("1", "3"): 0,
            ("2", "3"): 7,
        }
        transitions = {pair: identity_record(1, DEPTH, c=shift) for pair, shift in shifts.items()}
        cov = CoveringSpec(charts=("0", "1", "2", "3"), depth=DEPTH, transitions=transitions)
        summary = verify_covering(cov)
        assert summary.passed
        assert summary.reports[-1].witness["c_identity"].endswith("= 0")


class TestValidation:
    def test_missing_transition(self):
        cov = CoveringSpec(
            charts=("0", "1", "2"),
            depth=DEPTH,
            transitions={pair: identity_record(1, DEPTH) for pair in [("0", "1"), ("1", "2")]},
        )
        with pytest.raises(CoveringInconsistentError):
            verify_covering(cov)

    def test_unknown_chart(self):
        transitions = {("0", "9"): identity_record(1, DEPTH)}
        cov = CoveringSpec(charts=("0",), depth=DEPTH, transitions=transitions)
        with pytest.raises(CoveringInconsistentError):
            validate_covering(cov)

    def test_duplicate_charts(self):
        transitions = {("0", "1"): identity_record(1, DEPTH)}
        cov = CoveringSpec(charts=("0", "0"), depth=DEPTH, transitions=transitions)
        with pytest.raises(CoveringInconsistentError):
            validate_covering(cov)

    def test_defective_transition(self):
        broken = AutomorphismRecord(
            dim=1,
            c=Fraction(0),
            x_images=(WkbSymbol.x(1, 1, -DEPTH),),
            u_images=(WkbSymbol.x(1, 1, -DEPTH),),
            primitive=MultiPoly.zero(1),
            depth=DEPTH,
            map_spec=SymplecticMapSpec.identity(1),
        )
        cov = CoveringSpec(charts=("0", "1"), depth=DEPTH, transitions={("0", "1"): broken})
        with pytest.raises(CoveringInconsistentError, match="commutator defects"):
            validate_covering(cov)

    def test_twist_must_be_scalar(self):
        cov = identity_covering(3, {("0", "1", "2"): WkbSymbol.one(1, -DEPTH)})
        with pytest.raises(CoveringInconsistentError):
            validate_covering(cov)

    def test_star_unitary_scalars(self):
        assert is_star_unitary_scalar(central_series())
        assert not is_star_unitary_scalar(WkbSymbol.scalar(0, 2, -DEPTH))
