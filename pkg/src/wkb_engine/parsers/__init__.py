"""
Parsers Module

Expression grammar, canonical text printer and JSON document codec.
"""

from wkb_engine.parsers.codec import (
    covering_from_document,
    dump_json,
    dump_symbol,
    lien_from_document,
    lien_iso_from_document,
    load_json,
    load_symbol,
    map_spec_from_document,
    map_spec_to_document,
    read_document,
    record_from_document,
    record_from_images,
    record_to_document,
    report_from_document,
    report_to_document,
    summary_from_document,
    summary_to_document,
    symbol_from_document,
    symbol_to_document,
    transition_record,
    validate_document,
)
from wkb_engine.parsers.expression import (
    ExprAst,
    parse_expr,
    parse_poly,
    parse_symbol,
    to_poly,
    to_symbol,
    tokenize,
)
from wkb_engine.parsers.printer import format_poly, format_symbol, graded_lex_key

__all__ = [
    # Grammar
    "ExprAst",
    "tokenize",
    "parse_expr",
    "parse_symbol",
    "parse_poly",
    "to_symbol",
    "to_poly",

    # Printing
    "format_poly",
    "format_symbol",
    "graded_lex_key",

    # Documents
    "load_json",
    "read_document",
    "validate_document",
    "dump_json",
    "dump_symbol",
    "load_symbol",
    "symbol_to_document",
    "symbol_from_document",
    "map_spec_from_document",
    "map_spec_to_document",
    "record_to_document",
    "record_from_document",
    "record_from_images",
    "transition_record",
    "covering_from_document",
    "lien_from_document",
    "lien_iso_from_document",
    "report_to_document",
    "report_from_document",
    "summary_to_document",
    "summary_from_document",
]
