"""
JSON codec

Converts between the pydantic document models and the engine's types.
Symbols and reports round-trip exactly; expressions inside map specs are
evaluated commutatively, generator images as star expressions.
"""

from __future__ import annotations

import json
from collections import defaultdict
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import TypeVar

from loguru import logger
from pydantic import ValidationError

from wkb_engine.descent import (
    CheckReport,
    CoveringSpec,
    LienData,
    LienIsoSpec,
    Verdict,
    VerificationSummary,
)
from wkb_engine.errors import DocumentError
from wkb_engine.models import (
    ChartMapDocument,
    CoveringDocument,
    Document,
    ForwardDocument,
    ImagesDocument,
    InverseDocument,
    LienDocument,
    LienIsoDocument,
    MapSpecDocument,
    MonomialDocument,
    RecordDocument,
    ReportDocument,
    SummaryDocument,
    SymbolDocument,
    TermDocument,
    TransitionDocument,
)
from wkb_engine.parsers.expression import parse_poly, parse_symbol
from wkb_engine.parsers.printer import format_poly, graded_lex_key
from wkb_engine.polycore import Exponent, MultiPoly, format_rational, parse_rational
from wkb_engine.quantize import (
    AutomorphismRecord,
    SymplecticMapSpec,
    compute_primitive,
    identity_record,
    quantize_map,
)
from wkb_engine.symbol import WkbSymbol

DocumentT = TypeVar("DocumentT", bound=Document)


def validate_document(model: type[DocumentT], data: object) -> DocumentT:
    """Validate parsed JSON against a document model."""
    try:
        return model.model_validate(data)
    except ValidationError as e:
        raise DocumentError(f"malformed {model.__name__}: {e}") from e


def load_json(path: str | Path) -> object:
    """
    Parse a UTF-8 JSON file without validating it.

    Raises:
        DocumentError: If the file is unreadable or not valid JSON
    """
    path = Path(path)
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise DocumentError(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise DocumentError(f"{path} is not valid JSON: {e}") from e


def read_document(path: str | Path, model: type[DocumentT]) -> DocumentT:
    """
    Load and validate a UTF-8 JSON document.

    Raises:
        DocumentError: If the file is not valid JSON or fails validation
    """
    data = load_json(path)
    logger.debug(f"Loaded {model.__name__} from {path}")
    return validate_document(model, data)


def dump_json(data: object) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False)


# Symbols


def symbol_to_document(symbol: WkbSymbol) -> SymbolDocument:
    n = symbol.dim
    terms = []
    for order, coefficient in symbol.items():
        monomials = [
            MonomialDocument(c=format_rational(value), x=list(e[:n]), u=list(e[n:]))
            for e, value in sorted(coefficient.items(), key=lambda item: graded_lex_key(item[0]))
        ]
        terms.append(TermDocument(tau=order, monomials=monomials))
    return SymbolDocument(dim=n, floor=symbol.floor, terms=terms)


def symbol_from_document(document: SymbolDocument) -> WkbSymbol:
    n = document.dim
    terms: dict[int, dict[Exponent, Fraction]] = defaultdict(lambda: defaultdict(Fraction))
    for term in document.terms:
        for monomial in term.monomials:
            exponent = tuple(monomial.x) + tuple(monomial.u)
            terms[term.tau][exponent] += parse_rational(monomial.c)
    return WkbSymbol(n, document.floor, {j: MultiPoly(n, t) for j, t in terms.items()})


def dump_symbol(symbol: WkbSymbol) -> str:
    return dump_json(symbol_to_document(symbol).model_dump())


def load_symbol(text: str) -> WkbSymbol:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"symbol document is not valid JSON: {e}") from e
    return symbol_from_document(validate_document(SymbolDocument, data))


# Map specs and records


def map_spec_from_document(
    document: MapSpecDocument, shift: str | None = None
) -> SymplecticMapSpec:
    """Evaluate the component expressions; `shift` overrides the document's shift."""
    n = document.dim
    forward = [parse_poly(text, n) for text in document.forward.f + document.forward.g]
    inverse = [parse_poly(text, n) for text in document.inverse.x + document.inverse.u]
    return SymplecticMapSpec(
        n, tuple(forward), tuple(inverse), parse_rational(shift or document.shift)
    )


def map_spec_to_document(spec: SymplecticMapSpec) -> MapSpecDocument:
    n = spec.dim
    return MapSpecDocument(
        dim=n,
        forward=ForwardDocument(
            f=[format_poly(p) for p in spec.f], g=[format_poly(p) for p in spec.g]
        ),
        inverse=InverseDocument(
            x=[format_poly(p) for p in spec.inverse[:n]],
            u=[format_poly(p) for p in spec.inverse[n:]],
        ),
        shift=format_rational(spec.primitive_shift),
    )


def record_to_document(record: AutomorphismRecord) -> RecordDocument:
    return RecordDocument(
        dim=record.dim,
        depth=record.depth,
        c=format_rational(record.c),
        map=map_spec_to_document(record.map_spec),
        x_images=[symbol_to_document(image) for image in record.x_images],
        u_images=[symbol_to_document(image) for image in record.u_images],
        primitive=format_poly(record.primitive),
    )


def record_from_document(document: RecordDocument) -> AutomorphismRecord:
    n = document.dim
    if len(document.x_images) != n or len(document.u_images) != n:
        raise DocumentError(f"record needs {n} x-images and {n} u-images")
    return AutomorphismRecord(
        dim=n,
        c=parse_rational(document.c),
        x_images=tuple(symbol_from_document(d) for d in document.x_images),
        u_images=tuple(symbol_from_document(d) for d in document.u_images),
        primitive=parse_poly(document.primitive, n),
        depth=document.depth,
        map_spec=map_spec_from_document(document.map),
    )


def record_from_images(
    spec: SymplecticMapSpec, images: ImagesDocument, depth: int
) -> AutomorphismRecord:
    """Record from precomputed star-expression images; the primitive is computed from the map."""
    n = spec.dim
    if len(images.x) != n or len(images.u) != n:
        raise DocumentError(f"precomputed record needs {n} x-images and {n} u-images")
    floor = -depth
    return AutomorphismRecord(
        dim=n,
        c=spec.primitive_shift,
        x_images=tuple(parse_symbol(text, n, depth).truncate(floor) for text in images.x),
        u_images=tuple(parse_symbol(text, n, depth).truncate(floor) for text in images.u),
        primitive=compute_primitive(spec),
        depth=depth,
        map_spec=spec,
    )


def _build_record(
    map_document: MapSpecDocument, images: ImagesDocument | None, depth: int, shift: str | None
) -> AutomorphismRecord:
    spec = map_spec_from_document(map_document, shift)
    if images is None:
        return quantize_map(spec, depth)
    return record_from_images(spec, images, depth)


def transition_record(document: TransitionDocument, depth: int) -> AutomorphismRecord:
    """The record of a transition, quantized unless precomputed images are given."""
    return _build_record(document.map, document.record, depth, document.shift)


# Coverings, liens, isomorphisms


def _dims(transitions: list[TransitionDocument]) -> set[int]:
    return {transition.map.dim for transition in transitions}


def covering_from_document(document: CoveringDocument) -> CoveringSpec:
    """
    Build a CoveringSpec, quantizing transitions that have no precomputed images.

    Raises:
        DocumentError: If the transitions disagree on the dimension or are missing
    """
    dims = _dims(document.transitions)
    if len(dims) != 1:
        raise DocumentError(f"covering transitions must share one dimension, got {sorted(dims)}")
    depth = document.depth
    transitions = {
        (str(t.target), str(t.source)): transition_record(t, depth) for t in document.transitions
    }
    twists = {
        tuple(str(i) for i in twist.indices): symbol_from_document(twist.symbol)
        for twist in document.twists
    }
    return CoveringSpec(
        charts=tuple(str(chart) for chart in document.charts),
        depth=depth,
        transitions=transitions,
        twists=twists,  # type: ignore[arg-type]
    )


def lien_from_document(document: LienDocument) -> LienData:
    """Lien data; unlisted isomorphisms are the identity and unlisted sections are 1."""
    dims = _dims(document.isomorphisms) | {s.symbol.dim for s in document.sections}
    if dims - {document.dim}:
        raise DocumentError(f"lien dimension {document.dim} disagrees with its data {sorted(dims)}")
    sections = {}
    for section in document.sections:
        if len(section.indices) != 3:
            raise DocumentError(f"lien sections are indexed by triples, got {section.indices}")
        sections[tuple(str(i) for i in section.indices)] = symbol_from_document(section.symbol)
    charts = tuple(str(chart) for chart in document.charts)
    floor = -document.depth
    for triple in combinations(charts, 3):
        sections.setdefault(triple, WkbSymbol.one(document.dim, floor))
    isomorphisms = {
        pair: identity_record(document.dim, document.depth) for pair in combinations(charts, 2)
    }
    for transition in document.isomorphisms:
        pair = (str(transition.target), str(transition.source))
        isomorphisms[pair] = transition_record(transition, document.depth)
    return LienData(
        charts=charts,
        depth=document.depth,
        dim=document.dim,
        isomorphisms=isomorphisms,
        sections=sections,  # type: ignore[arg-type]
    )


def lien_iso_from_document(document: LienIsoDocument, depth: int) -> LienIsoSpec:
    sections = {}
    for section in document.sections:
        if len(section.indices) != 2:
            raise DocumentError(f"isomorphism sections are indexed by pairs, got {section.indices}")
        sections[(str(section.indices[0]), str(section.indices[1]))] = symbol_from_document(
            section.symbol
        )
    return LienIsoSpec(
        u={str(m.chart): _chart_record(m, depth) for m in document.u},
        sections=sections,
    )


def _chart_record(document: ChartMapDocument, depth: int) -> AutomorphismRecord:
    return _build_record(document.map, document.record, depth, None)


# Reports


def report_to_document(report: CheckReport) -> ReportDocument:
    return ReportDocument.model_validate(report.to_dict())


def report_from_document(document: ReportDocument) -> CheckReport:
    return CheckReport(
        check=document.check,
        indices=tuple(document.indices),
        verdict=Verdict(document.verdict),
        witness=dict(document.witness),
    )


def summary_to_document(summary: VerificationSummary) -> SummaryDocument:
    return SummaryDocument.model_validate(summary.to_dict())


def summary_from_document(document: SummaryDocument) -> VerificationSummary:
    return VerificationSummary(tuple(report_from_document(r) for r in document.reports))
