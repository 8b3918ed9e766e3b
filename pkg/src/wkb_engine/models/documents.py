"""
Document Models

Pydantic models for the JSON documents read and written by the CLI:
symbols, symplectic map specs, automorphism records, coverings, liens,
lien isomorphisms and verification reports. Unknown keys are rejected.
"""

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from wkb_engine.polycore.rational import RATIONAL_PATTERN, parse_rational

ChartId = str | int


class Document(BaseModel):
    """Base for all documents: strict keys, aliases accepted on input."""

    model_config = ConfigDict(extra="forbid", populate_by_name=True)


def _check_rational(value: str) -> str:
    if not RATIONAL_PATTERN.fullmatch(value):
        raise ValueError(f"coefficient {value!r} does not match -?[0-9]+(/[0-9]+)?")
    parse_rational(value)
    return value


# Symbols


class MonomialDocument(Document):
    """One monomial c·x^e·u^f of a coefficient."""

    c: str
    x: list[int]
    u: list[int]

    @field_validator("c")
    @classmethod
    def validate_coefficient(cls, value: str) -> str:
        return _check_rational(value)

    @field_validator("x", "u")
    @classmethod
    def validate_exponents(cls, value: list[int]) -> list[int]:
        if any(e < 0 for e in value):
            raise ValueError("exponents must be natural numbers")
        return value


class TermDocument(Document):
    """The coefficient of τ^tau."""

    tau: int
    monomials: list[MonomialDocument] = Field(default_factory=list)


class SymbolDocument(Document):
    """A truncated symbol with its reliability floor."""

    dim: int = Field(ge=0)
    floor: int
    terms: list[TermDocument] = Field(default_factory=list)

    @model_validator(mode="after")
    def validate_shapes(self) -> "SymbolDocument":
        for term in self.terms:
            for monomial in term.monomials:
                if len(monomial.x) != self.dim or len(monomial.u) != self.dim:
                    raise ValueError(
                        f"monomial exponent lengths {len(monomial.x)}/{len(monomial.u)} "
                        f"do not match dim {self.dim}"
                    )
        return self


# Symplectic maps and records


class ForwardDocument(Document):
    f: list[str]
    g: list[str]


class InverseDocument(Document):
    x: list[str]
    u: list[str]


class MapSpecDocument(Document):
    """A polynomial symplectic map; expressions are evaluated commutatively."""

    dim: int = Field(ge=0)
    forward: ForwardDocument
    inverse: InverseDocument
    shift: str = "0"

    @field_validator("shift")
    @classmethod
    def validate_shift(cls, value: str) -> str:
        return _check_rational(value)

    @model_validator(mode="after")
    def validate_lengths(self) -> "MapSpecDocument":
        for name, components in (
            ("f", self.forward.f),
            ("g", self.forward.g),
            ("x", self.inverse.x),
            ("u", self.inverse.u),
        ):
            if len(components) != self.dim:
                raise ValueError(f"{name} has {len(components)} components, expected {self.dim}")
        return self


class ImagesDocument(Document):
    """Precomputed generator images as star expressions."""

    x: list[str]
    u: list[str]


class RecordDocument(Document):
    """A complete automorphism record as written by `quantize`."""

    dim: int = Field(ge=0)
    depth: int = Field(ge=0)
    c: str = "0"
    map: MapSpecDocument
    x_images: list[SymbolDocument]
    u_images: list[SymbolDocument]
    primitive: str

    @field_validator("c")
    @classmethod
    def validate_c(cls, value: str) -> str:
        return _check_rational(value)


# Coverings and liens


class TransitionDocument(Document):
    """Φ_ij acting from chart `from` to chart `to`."""

    source: ChartId = Field(alias="from")
    target: ChartId = Field(alias="to")
    map: MapSpecDocument
    record: ImagesDocument | None = None
    shift: str | None = None

    @field_validator("shift")
    @classmethod
    def validate_shift(cls, value: str | None) -> str | None:
        return None if value is None else _check_rational(value)


class TwistDocument(Document):
    """A central dim-0 factor multiplied into P_ijk."""

    indices: list[ChartId] = Field(min_length=3, max_length=3)
    symbol: SymbolDocument


class CoveringDocument(Document):
    charts: list[ChartId]
    depth: int = Field(6, ge=0)
    transitions: list[TransitionDocument] = Field(default_factory=list)
    twists: list[TwistDocument] = Field(default_factory=list)


class SectionDocument(Document):
    """A section indexed by a pair or a triple of charts."""

    indices: list[ChartId] = Field(min_length=2, max_length=3)
    symbol: SymbolDocument


class LienDocument(Document):
    """Abstract lien data: isomorphisms f_ij and sections a_ijk."""

    dim: int = Field(ge=0)
    charts: list[ChartId]
    depth: int = Field(6, ge=0)
    isomorphisms: list[TransitionDocument] = Field(default_factory=list)
    sections: list[SectionDocument] = Field(default_factory=list)


class ChartMapDocument(Document):
    chart: ChartId
    map: MapSpecDocument
    record: ImagesDocument | None = None


class LienIsoDocument(Document):
    """Per-chart automorphisms u_i and pair sections l_ij."""

    u: list[ChartMapDocument] = Field(default_factory=list)
    sections: list[SectionDocument] = Field(default_factory=list)


# Reports


class ReportDocument(Document):
    check: str
    indices: list[str]
    verdict: str = Field(pattern="^(pass|fail)$")
    witness: dict[str, str] = Field(default_factory=dict)


class SummaryDocument(Document):
    summary: str
    passed: bool
    reports: list[ReportDocument]
