"""
Models Module

Pydantic models for the JSON documents exchanged by the CLI and for the
engine configuration.
"""

from wkb_engine.models.documents import (
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
    SectionDocument,
    SummaryDocument,
    SymbolDocument,
    TermDocument,
    TransitionDocument,
    TwistDocument,
)
from wkb_engine.models.settings import EngineSection, EngineSettings, LoggingSection

__all__ = [
    # Symbols
    "Document",
    "SymbolDocument",
    "TermDocument",
    "MonomialDocument",

    # Maps and records
    "MapSpecDocument",
    "ForwardDocument",
    "InverseDocument",
    "ImagesDocument",
    "RecordDocument",

    # Descent
    "TransitionDocument",
    "TwistDocument",
    "CoveringDocument",
    "SectionDocument",
    "LienDocument",
    "ChartMapDocument",
    "LienIsoDocument",

    # Reports
    "ReportDocument",
    "SummaryDocument",

    # Settings
    "EngineSettings",
    "EngineSection",
    "LoggingSection",
]
