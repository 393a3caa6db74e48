"""Recursive-descent parser for scalar and form expressions.

Grammar (``^`` binds tightest, then ``*`` and ``/``, then ``+`` and ``-``)::

    expr    = ["+" | "-"] term { ("+" | "-") term }
    term    = factor { ("*" | "/") factor }
    factor  = ["-"] power
    power   = atom { "^" atom }
    atom    = INT | NAME | FRAME | "(" expr ")"
    FRAME   = "e" DIGIT {DIGIT}        e.g. e7, e12 (= e1^e2), e127

``x ^ k`` is a power when ``x`` is a scalar and ``k`` a non-negative integer;
between two forms of positive degree it is the wedge product.  ``*`` multiplies
scalars, scales forms and wedges forms.  ``/`` divides by a nonzero constant.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exterior import KForm, wedge
from .scalars import Scalar

TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")
FRAME = re.compile(r"e(\d+)$")


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        self.message, self.line, self.column = message, line, column
        super().__init__(f"line {line}, column {column}: {message}")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op", "end"
    text: str
    column: int


def tokenize(text: str, line: int = 1, offset: int = 0) -> list[Token]:
    out, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = TOKEN.match(text, pos)
        if not m or m.end() == pos:
            bad = len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[pos + bad]!r}", line, offset + pos + bad + 1)
        kind = m.lastgroup
        start = m.start(kind)
        out.append(Token(kind, m.group(kind), offset + start + 1))
        pos = m.end()
    out.append(Token("end", "", offset + len(text) + 1))
    return out


class _Value:
    """A homogeneous form of known degree, or a scalar (degree 0)."""

    __slots__ = ("degree", "scalar", "form")

    def __init__(self, scalar: Scalar | None = None, form: KForm | None = None):
        if form is not None and form.degree == 0:
            scalar, form = form.coeff(()), None
        self.form = form
        self.scalar = scalar if form is None else None
        self.degree = 0 if form is None else form.degree

    def is_zero(self) -> bool:
        return self.form.is_zero() if self.form is not None else self.scalar.is_zero()


class ExpressionParser:
    def __init__(self, text: str, dim: int | None, params: Sequence[str] | None, line: int = 1, offset: int = 0):
        self.tokens = tokenize(text, line, offset)
        self.i = 0
        self.dim = dim
        self.params = None if params is None else set(params)
        self.line = line

    # helpers

    def peek(self) -> Token:
        return self.tokens[self.i]

    def next(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg: str, tok: Token | None = None):
        tok = tok or self.peek()
        raise ParseError(msg, self.line, tok.column)

    def accept(self, op: str) -> bool:
        tok = self.peek()
        if tok.kind == "op" and tok.text == op:
            self.i += 1
            return True
        return False

    # arithmetic on values

    def _add(self, a: _Value, b: _Value, tok: Token) -> _Value:
        if a.is_zero():
            return b
        if b.is_zero():
            return a
        if a.degree != b.degree:
            self.error(f"cannot add forms of degree {a.degree} and {b.degree}", tok)
        if a.form is None:
            return _Value(a.scalar + b.scalar)
        return _Value(form=a.form + b.form)

    def _neg(self, a: _Value) -> _Value:
        return _Value(-a.scalar) if a.form is None else _Value(form=-a.form)

    def _mul(self, a: _Value, b: _Value, tok: Token) -> _Value:
        if a.form is None and b.form is None:
            return _Value(a.scalar * b.scalar)
        if a.form is None:
            return _Value(form=b.form * a.scalar)
        if b.form is None:
            return _Value(form=a.form * b.scalar)
        return _Value(form=wedge(a.form, b.form))

    def _div(self, a: _Value, b: _Value, tok: Token) -> _Value:
        if b.form is not None or not b.scalar.is_constant():
            self.error("division is only by a nonzero constant", tok)
        c = b.scalar.constant_value()
        if c == 0:
            self.error("division by zero", tok)
        return _Value(a.scalar / c) if a.form is None else _Value(form=a.form / c)

    def _hat(self, a: _Value, b: _Value, tok: Token) -> _Value:
        if a.form is None and b.form is None:
            if not b.scalar.is_constant():
                self.error("exponent must be a non-negative integer", tok)
            k = b.scalar.constant_value()
            if k.denominator != 1 or k < 0:
                self.error("exponent must be a non-negative integer", tok)
            return _Value(a.scalar ** int(k))
        if a.form is None or b.form is None:
            self.error("'^' between a form and a scalar is ambiguous; use '*'", tok)
        return _Value(form=wedge(a.form, b.form))

    # grammar

    def parse(self) -> _Value:
        v = self.expr()
        if self.peek().kind != "end":
            self.error(f"unexpected {self.peek().text!r}")
        return v

    def expr(self) -> _Value:
        neg = False
        if self.accept("-"):
            neg = True
        else:
            self.accept("+")
        v = self.term()
        if neg:
            v = self._neg(v)
        while True:
            tok = self.peek()
            if self.accept("+"):
                v = self._add(v, self.term(), tok)
            elif self.accept("-"):
                v = self._add(v, self._neg(self.term()), tok)
            else:
                return v

    def term(self) -> _Value:
        v = self.factor()
        while True:
            tok = self.peek()
            if self.accept("*"):
                v = self._mul(v, self.factor(), tok)
            elif self.accept("/"):
                v = self._div(v, self.factor(), tok)
            else:
                return v

    def factor(self) -> _Value:
        if self.accept("-"):
            return self._neg(self.power())
        return self.power()

    def power(self) -> _Value:
        v = self.atom()
        while True:
            tok = self.peek()
            if self.accept("^"):
                v = self._hat(v, self.atom(), tok)
            else:
                return v

    def atom(self) -> _Value:
        tok = self.next()
        if tok.kind == "int":
            return _Value(Scalar.const(int(tok.text)))
        if tok.kind == "name":
            m = FRAME.match(tok.text)
            if m:
                if self.dim is None:
                    self.error(f"frame element {tok.text} not allowed in a scalar expression", tok)
                idx = tuple(int(ch) for ch in m.group(1))
                if any(not 1 <= i <= self.dim for i in idx):
                    self.error(f"frame index out of range 1..{self.dim} in {tok.text}", tok)
                return _Value(form=KForm.basis(self.dim, *idx))
            if self.params is not None and tok.text not in self.params:
                self.error(f"undeclared parameter {tok.text!r}", tok)
            return _Value(Scalar.var(tok.text))
        if tok.kind == "op" and tok.text == "(":
            v = self.expr()
            if not self.accept(")"):
                self.error("expected ')'")
            return v
        self.error("expected a number, parameter, frame element or '('" if tok.kind != "end" else "unexpected end of expression", tok)


def parse_scalar(text: str, params: Sequence[str] | None = None, line: int = 1, offset: int = 0) -> Scalar:
    v = ExpressionParser(text, None, params, line, offset).parse()
    return v.scalar


def parse_form(text: str, dim: int, params: Sequence[str] | None = None, degree: int | None = None,
               line: int = 1, offset: int = 0) -> KForm:
    """Parse a homogeneous form; ``degree`` (if given) is enforced, zero excepted."""
    v = ExpressionParser(text, dim, params, line, offset).parse()
    if v.form is None:
        if v.scalar.is_zero():
            return KForm.zero(dim, degree if degree is not None else 0)
        if degree not in (None, 0):
            raise ParseError(f"expected a {degree}-form, got a scalar", line, offset + 1)
        return KForm.scalar(dim, v.scalar)
    if degree is not None and v.form.degree != degree:
        raise ParseError(f"expected a {degree}-form, got degree {v.form.degree}", line, offset + 1)
    return v.form


def parse_rational(text: str, line: int = 1, offset: int = 0) -> Fraction:
    s = parse_scalar(text, (), line, offset)
    return s.constant_value()
