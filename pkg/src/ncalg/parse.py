"""Parser for polynomial and element expressions.

Grammar (``*`` is the noncommutative product, left associative)::

    expr    := term (('+' | '-') term)*
    term    := unary ('*' unary)*
    unary   := ('+' | '-') unary | power
    power   := primary ('^' INT)?
    primary := 'x' | NUMBER ('x' | LABEL)? | LABEL | '(' expr ')' | tuple
    tuple   := '(' SIGNED_NUMBER (',' SIGNED_NUMBER)+ ')'

NUMBER is an integer, decimal or ``p/q``; a number directly followed by a
label (no space) scales it, as in ``2i`` or ``1/2k``.  A tuple gives all
coordinates, e.g. ``(1,0,2,-1)``.  Basis labels come from the
algebra; the unit's label ``1`` is read as a number.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .algebra import AlgebraSpec, Element, parse_scalar
from .errors import ParseError
from .ncpoly import NcPolynomial, constant, variable

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<number>\d+(?:\.\d*)?(?:/\d+)?|\.\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*^(),])
""", re.VERBOSE)

VARIABLE = "x"


@dataclass
class _Token:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            line, col = _line_col(text, pos)
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append(_Token(kind, m.group(), pos))
        pos = m.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


def _line_col(text: str, pos: int) -> tuple[int, int]:
    line = text.count("\n", 0, pos) + 1
    start = text.rfind("\n", 0, pos) + 1
    return line, pos - start + 1


def _check_labels(algebra: AlgebraSpec) -> dict[str, int]:
    labels = {}
    for idx, label in enumerate(algebra.basis):
        if idx == algebra.unit and label == "1":
            continue
        if label == VARIABLE:
            raise ParseError(f"basis label {label!r} collides with the variable")
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", label):
            raise ParseError(f"basis label {label!r} cannot be written in expressions")
        labels[label] = idx
    return labels


class _Parser:
    def __init__(self, text: str, algebra: AlgebraSpec, backend: str):
        self.text = text
        self.algebra = algebra
        self.backend = backend
        self.labels = _check_labels(algebra)
        self.tokens = _tokenize(text)
        self.i = 0

    def error(self, message: str, token: _Token | None = None):
        token = token or self.peek()
        line, col = _line_col(self.text, token.pos)
        return ParseError(message, line, col)

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def take(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def accept(self, text: str) -> bool:
        if self.peek().kind == "op" and self.peek().text == text:
            self.i += 1
            return True
        return False

    def expect(self, text: str) -> None:
        if not self.accept(text):
            found = self.peek().text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")

    def parse(self):
        if self.peek().kind == "end":
            raise self.error("empty expression")
        value = self.expr()
        if self.peek().kind != "end":
            raise self.error(f"unexpected {self.peek().text!r}")
        return value

    def expr(self):
        value = self.term()
        while True:
            if self.accept("+"):
                value = value + self.term()
            elif self.accept("-"):
                value = value - self.term()
            else:
                return value

    def term(self):
        value = self.unary()
        while self.accept("*"):
            value = value * self.unary()
        return value

    def unary(self):
        if self.accept("-"):
            return -self.unary()
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self):
        value = self.primary()
        if self.accept("^"):
            tok = self.take()
            if tok.kind != "number" or not tok.text.isdigit():
                raise self.error("exponent must be a non-negative integer", tok)
            value = value ** int(tok.text)
        return value

    def primary(self):
        tok = self.peek()
        if tok.kind == "number":
            self.take()
            try:
                scalar = parse_scalar(tok.text, self.backend)
            except (ValueError, ZeroDivisionError):
                raise self.error(f"bad number {tok.text!r}", tok) from None
            nxt = self.peek()
            if nxt.kind == "ident" and nxt.pos == tok.pos + len(tok.text):
                self.take()
                if nxt.text == VARIABLE:
                    return variable(self.algebra) * self._unit(tok) * scalar
                return self.label(nxt) * scalar
            return constant(self._unit(tok) * scalar)
        if tok.kind == "ident":
            self.take()
            if tok.text == VARIABLE:
                return variable(self.algebra)
            return self.label(tok)
        if self.accept("("):
            coords = self.try_tuple()
            if coords is not None:
                return self.tuple_literal(coords, tok)
            inner = self.expr()
            self.expect(")")
            return inner
        found = tok.text or "end of input"
        raise self.error(f"unexpected {found!r}")

    def _unit(self, tok: _Token) -> Element:
        if self.algebra.unit is None:
            raise self.error("bare numbers need an algebra with a unit", tok)
        one = self.algebra.one()
        return one.to_float() if self.backend == "float" else one

    def label(self, tok: _Token) -> NcPolynomial:
        if tok.text not in self.labels:
            raise self.error(f"unknown basis label {tok.text!r}", tok)
        e = self.algebra.basis_element(self.labels[tok.text])
        return constant(e.to_float() if self.backend == "float" else e)

    def try_tuple(self) -> list | None:
        """Read ``n1, n2, ..., nk)`` after an opening parenthesis, or rewind and return None."""
        save = self.i
        coords = []
        while True:
            sign = -1 if self.accept("-") else 1
            if sign == 1:
                self.accept("+")
            tok = self.peek()
            if tok.kind != "number":
                break
            self.take()
            try:
                coords.append(sign * parse_scalar(tok.text, self.backend))
            except (ValueError, ZeroDivisionError):
                raise self.error(f"bad number {tok.text!r}", tok) from None
            if self.accept(","):
                continue
            if len(coords) > 1 and self.accept(")"):
                return coords
            break
        self.i = save
        return None

    def tuple_literal(self, coords: list, tok: _Token) -> NcPolynomial:
        if len(coords) != self.algebra.dim:
            raise self.error(
                f"coordinate tuple has {len(coords)} entries, algebra dim is {self.algebra.dim}", tok)
        return constant(Element(self.algebra, tuple(coords)))

def _as_element(p: NcPolynomial) -> Element:
    total = p.algebra.zero()
    for m in p.monomials:
        total = total + m.coeffs[0]
    return total


def parse_polynomial(text: str, algebra: AlgebraSpec, backend: str = "rational") -> NcPolynomial:
    """Parse an expression in x; products are expanded by the merge rule."""
    return _Parser(text, algebra, backend).parse()


def parse_element(text: str, algebra: AlgebraSpec, backend: str = "rational") -> Element:
    """Parse an element literal such as ``1+2i-3k`` or ``(1,0,2,-1)``."""
    p = parse_polynomial(text, algebra, backend)
    if p.degree > 0:
        raise ParseError("expected an element, found an expression in x", 1, 1)
    value = _as_element(p)
    return value.to_float() if backend == "float" else value
