"""
Helper functions for command-line operands
"""
import re
from pathlib import Path

from wkb_engine.errors import DimensionMismatchError, DocumentError
from wkb_engine.models import SymbolDocument
from wkb_engine.parsers import parse_symbol, read_document, symbol_from_document
from wkb_engine.symbol import WkbSymbol

VARIABLE_PATTERN = re.compile(r"[xu]([0-9]+)")
FILE_PREFIX = "@"


def is_file_operand(text: str) -> bool:
    return text.startswith(FILE_PREFIX)


def operand_dim(text: str) -> int:
    """
    Smallest dimension an operand can live in.

    For an @file operand this is the document's dim; for an expression it
    is the largest variable index that appears.
    """
    if is_file_operand(text):
        return read_document(_operand_path(text), SymbolDocument).dim
    return max((int(index) for index in VARIABLE_PATTERN.findall(text)), default=0)


def infer_dim(operands: list[str]) -> int:
    """Dimension shared by all operands when --dim is not given."""
    return max((operand_dim(text) for text in operands), default=0)


def load_operand(text: str, dim: int, depth: int) -> WkbSymbol:
    """
    Parse an operand as a star expression, or load it from `@path.json`.

    Raises:
        ExpressionSyntaxError: If the expression is malformed
        IndexOutOfRangeError: If a variable index exceeds dim
        DocumentError: If the symbol document is unreadable or malformed
        DimensionMismatchError: If the document's dim differs from dim
    """
    if not is_file_operand(text):
        return parse_symbol(text, dim, depth)
    symbol = symbol_from_document(read_document(_operand_path(text), SymbolDocument))
    if symbol.dim != dim:
        raise DimensionMismatchError(symbol.dim, dim, f"{text} and --dim")
    return symbol


def _operand_path(text: str) -> Path:
    path = Path(text[len(FILE_PREFIX):])
    if not path.name:
        raise DocumentError(f"empty file name in operand {text!r}")
    return path
