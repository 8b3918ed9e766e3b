"""
Expression grammar

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := ('-' | '+') unary | factor
    factor := atom ('^' signed-int)?
    atom   := rational | 'x' index | 'u' index | 'tau' | '(' expr ')'

One grammar, two evaluations: in operator slots '*' is the star product and
the result is a WkbSymbol; in map document slots the same text is evaluated
commutatively to a MultiPoly and 'tau' is rejected.
"""

from __future__ import annotations

import re
from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, NamedTuple

from wkb_engine.errors import ExpressionSyntaxError, IndexOutOfRangeError
from wkb_engine.polycore import MultiPoly, Variable, parse_rational
from wkb_engine.symbol import WkbSymbol, star_power, star_product

TOKEN_PATTERN = re.compile(
    r"\s*(?:(?P<number>[0-9]+(?:/[0-9]+)?)"
    r"|(?P<tau>tau)\b"
    r"|(?P<variable>[xu][0-9]+)\b"
    r"|(?P<op>[-+*^()]))"
)


class Token(NamedTuple):
    kind: str
    text: str
    position: int


def tokenize(text: str) -> Iterator[Token]:
    position = 0
    while position < len(text):
        if text[position:].isspace():
            return
        match = TOKEN_PATTERN.match(text, position)
        if not match:
            offset = position + len(text[position:]) - len(text[position:].lstrip())
            raise ExpressionSyntaxError("unexpected character", text, offset)
        kind = match.lastgroup or "op"
        yield Token(kind, match.group(kind), match.start(kind))
        position = match.end()


# AST nodes


@dataclass(frozen=True)
class Number:
    value: Fraction
    position: int


@dataclass(frozen=True)
class Var:
    kind: Literal["x", "u"]
    index: int
    position: int


@dataclass(frozen=True)
class Tau:
    position: int


@dataclass(frozen=True)
class BinaryOp:
    op: Literal["+", "-", "*"]
    left: ExprAst
    right: ExprAst
    position: int


@dataclass(frozen=True)
class Neg:
    operand: ExprAst
    position: int


@dataclass(frozen=True)
class Power:
    base: ExprAst
    exponent: int
    position: int


ExprAst = Number | Var | Tau | BinaryOp | Neg | Power


class _Parser:
    def __init__(self, text: str, dim: int):
        self.text = text
        self.dim = dim
        self.tokens = list(tokenize(text))
        self.index = 0

    def error(self, message: str, position: int | None = None) -> ExpressionSyntaxError:
        if position is None:
            position = self.peek().position if self.peek() else len(self.text)
        return ExpressionSyntaxError(message, self.text, position)

    def peek(self) -> Token | None:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def accept(self, *ops: str) -> Token | None:
        token = self.peek()
        if token and token.kind == "op" and token.text in ops:
            self.index += 1
            return token
        return None

    def expect(self, op: str) -> Token:
        token = self.accept(op)
        if token is None:
            raise self.error(f"expected {op!r}")
        return token

    def parse(self) -> ExprAst:
        if not self.tokens:
            raise self.error("empty expression", 0)
        tree = self.expr()
        if self.peek() is not None:
            raise self.error("unexpected token")
        return tree

    def expr(self) -> ExprAst:
        tree = self.term()
        while token := self.accept("+", "-"):
            tree = BinaryOp(token.text, tree, self.term(), token.position)  # type: ignore[arg-type]
        return tree

    def term(self) -> ExprAst:
        tree = self.unary()
        while token := self.accept("*"):
            tree = BinaryOp("*", tree, self.unary(), token.position)
        return tree

    def unary(self) -> ExprAst:
        if token := self.accept("-"):
            return Neg(self.unary(), token.position)
        if self.accept("+"):
            return self.unary()
        return self.factor()

    def factor(self) -> ExprAst:
        base = self.atom()
        if caret := self.accept("^"):
            sign = -1 if self.accept("-") else 1
            token = self.peek()
            if token is None or token.kind != "number" or "/" in token.text:
                raise self.error("exponent must be an integer")
            self.index += 1
            exponent = sign * int(token.text)
            if exponent < 0 and not isinstance(base, Tau):
                raise self.error("only tau admits a negative exponent", caret.position)
            return Power(base, exponent, caret.position)
        return base

    def atom(self) -> ExprAst:
        token = self.peek()
        if token is None:
            raise self.error("unexpected end of expression")
        if token.kind == "number":
            self.index += 1
            return Number(parse_rational(token.text), token.position)
        if token.kind == "tau":
            self.index += 1
            return Tau(token.position)
        if token.kind == "variable":
            self.index += 1
            kind, index = token.text[0], int(token.text[1:])
            if not 1 <= index <= self.dim:
                raise IndexOutOfRangeError(kind, index, self.dim)
            return Var(kind, index, token.position)  # type: ignore[arg-type]
        if self.accept("("):
            tree = self.expr()
            self.expect(")")
            return tree
        raise self.error("unexpected token")


def parse_expr(text: str, dim: int) -> ExprAst:
    """
    Parse expression text for a dim-n algebra.

    Raises:
        ExpressionSyntaxError: On malformed text or a forbidden exponent
        IndexOutOfRangeError: If a variable index is 0 or exceeds dim
    """
    return _Parser(text, dim).parse()


def to_symbol(tree: ExprAst, dim: int, depth: int) -> WkbSymbol:
    """
    Evaluate with '*' as the star product.

    Every atom of order m carries floor m - depth; products and sums
    propagate the floor.
    """
    floor = -depth
    match tree:
        case Number(value=value):
            return WkbSymbol.scalar(dim, value, floor)
        case Var(kind="x", index=index):
            return WkbSymbol.x(dim, index, floor)
        case Var(index=index):
            return WkbSymbol.u(dim, index, floor)
        case Tau():
            return WkbSymbol.tau_power(dim, 1, 1 + floor)
        case Power(base=Tau(), exponent=exponent):
            return WkbSymbol.tau_power(dim, exponent, exponent + floor)
        case Power(base=base, exponent=exponent):
            return star_power(to_symbol(base, dim, depth), exponent)
        case Neg(operand=operand):
            return -to_symbol(operand, dim, depth)
        case BinaryOp(op="+", left=left, right=right):
            return to_symbol(left, dim, depth) + to_symbol(right, dim, depth)
        case BinaryOp(op="-", left=left, right=right):
            return to_symbol(left, dim, depth) - to_symbol(right, dim, depth)
        case BinaryOp(left=left, right=right):
            return star_product(to_symbol(left, dim, depth), to_symbol(right, dim, depth))
    raise TypeError(f"unknown expression node {tree!r}")


def to_poly(tree: ExprAst, dim: int, text: str = "") -> MultiPoly:
    """
    Evaluate commutatively to a polynomial.

    Raises:
        ExpressionSyntaxError: If the expression mentions tau
    """
    match tree:
        case Number(value=value):
            return MultiPoly.constant(dim, value)
        case Var(kind=kind, index=index):
            return MultiPoly.variable(dim, Variable(kind, index))
        case Tau(position=position):
            raise ExpressionSyntaxError("tau is not allowed in a polynomial slot", text, position)
        case Power(base=base, exponent=exponent):
            return to_poly(base, dim, text) ** exponent
        case Neg(operand=operand):
            return -to_poly(operand, dim, text)
        case BinaryOp(op="+", left=left, right=right):
            return to_poly(left, dim, text) + to_poly(right, dim, text)
        case BinaryOp(op="-", left=left, right=right):
            return to_poly(left, dim, text) - to_poly(right, dim, text)
        case BinaryOp(left=left, right=right):
            return to_poly(left, dim, text) * to_poly(right, dim, text)
    raise TypeError(f"unknown expression node {tree!r}")


def parse_symbol(text: str, dim: int, depth: int) -> WkbSymbol:
    """Parse and evaluate in an operator slot."""
    return to_symbol(parse_expr(text, dim), dim, depth)


def parse_poly(text: str, dim: int) -> MultiPoly:
    """Parse and evaluate in a polynomial slot."""
    return to_poly(parse_expr(text, dim), dim, text)
