"""Shared recursive-descent parser for polynomial and field-element text.

The grammar is small::

    expr   := [sign] term (sign term)*
    term   := factor (('*' factor) | ('/' INT))*
    factor := atom ['^' INT]
    atom   := INT | NAME | '(' expr ')'

Evaluation is delegated to a target ring through two callbacks, so the
same parser builds number field elements and multivariate polynomials.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from .errors import PolySyntaxError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op", "end"
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            raise PolySyntaxError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(Token("int", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(Token("name", m.group(2), start))
        else:
            op = "^" if m.group(3) == "**" else m.group(3)
            tokens.append(Token("op", op, start))
        pos = m.end()
    tokens.append(Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, const: Callable[[Fraction], Any],
                 name: Callable[[str, int], Any]):
        self.tokens = tokenize(text)
        self.i = 0
        self.const = const
        self.name = name

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_int(self) -> int:
        tok = self.take()
        if tok.kind != "int":
            raise PolySyntaxError("expected an integer", tok.pos)
        return int(tok.text)

    def parse(self):
        tok = self.peek()
        if tok.kind == "end":
            raise PolySyntaxError("empty expression", tok.pos)
        value = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise PolySyntaxError(f"unexpected {tok.text!r}", tok.pos)
        return value

    def expr(self):
        sign = 1
        tok = self.peek()
        if tok.kind == "op" and tok.text in "+-":
            self.take()
            sign = -1 if tok.text == "-" else 1
        value = self.term()
        if sign < 0:
            value = -value
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "+-":
                self.take()
                rhs = self.term()
                value = value + rhs if tok.text == "+" else value - rhs
            else:
                return value

    def term(self):
        value = self.factor()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text == "*":
                self.take()
                value = value * self.factor()
            elif tok.kind == "op" and tok.text == "/":
                self.take()
                at = self.peek().pos
                d = self.expect_int()
                if d == 0:
                    raise PolySyntaxError("division by zero", at)
                value = value * self.const(Fraction(1, d))
            else:
                return value

    def factor(self):
        value = self.atom()
        tok = self.peek()
        if tok.kind == "op" and tok.text == "^":
            self.take()
            value = value ** self.expect_int()
        return value

    def atom(self):
        tok = self.take()
        if tok.kind == "int":
            return self.const(Fraction(int(tok.text)))
        if tok.kind == "name":
            return self.name(tok.text, tok.pos)
        if tok.kind == "op" and tok.text == "(":
            value = self.expr()
            close = self.take()
            if close.kind != "op" or close.text != ")":
                raise PolySyntaxError("expected ')'", close.pos)
            return value
        what = "end of input" if tok.kind == "end" else repr(tok.text)
        raise PolySyntaxError(f"unexpected {what}", tok.pos)


def parse_expression(text: str, const: Callable[[Fraction], Any],
                     name: Callable[[str, int], Any]):
    """Parse ``text`` and evaluate it with ``const`` and ``name`` callbacks."""
    return _Parser(text, const, name).parse()


def format_rational(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_monomial(names, exps) -> str:
    parts = []
    for v, e in zip(names, exps):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts)
