"""
Shared fixtures
"""

from fractions import Fraction

import hypothesis
import pytest

from wkb_engine.parsers import parse_poly, parse_symbol
from wkb_engine.quantize import SymplecticMapSpec, compose_specs
from wkb_engine.symbol import WkbSymbol

hypothesis.settings.register_profile("default", max_examples=25, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=5, deadline=None)
hypothesis.settings.load_profile("default")


def build_spec(forward: list[str], inverse: list[str], shift: int | Fraction = 0, dim: int = 1):
    return SymplecticMapSpec(
        dim,
        tuple(parse_poly(text, dim) for text in forward),
        tuple(parse_poly(text, dim) for text in inverse),
        Fraction(shift),
    )


@pytest.fixture
def sym():
    """parse_symbol with dim 1 and depth 4 unless given."""

    def build(text: str, dim: int = 1, depth: int = 4) -> WkbSymbol:
        return parse_symbol(text, dim, depth)

    return build


@pytest.fixture
def make_spec():
    return build_spec


@pytest.fixture
def identity():
    return SymplecticMapSpec.identity(1)


@pytest.fixture
def rotation():
    return build_spec(["u1", "-x1"], ["-u1", "x1"])


@pytest.fixture
def shear():
    return build_spec(["x1", "u1 + 3*x1^2"], ["x1", "u1 - 3*x1^2"])


@pytest.fixture
def half_turn():
    return build_spec(["-x1", "-u1"], ["-x1", "-u1"])


@pytest.fixture
def u_shear():
    return build_spec(["x1 + u1^2", "u1"], ["x1 - u1^2", "u1"])


@pytest.fixture
def sandwich(shear, rotation):
    """shear∘rotation∘shear; its components mix x1 and u1 in one monomial."""
    return compose_specs(compose_specs(shear, rotation), shear)
