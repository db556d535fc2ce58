"""Tokenizer/parser for the polynomial text grammar shared by ring specs and polynomials.

Grammar (whitespace is ignored, offsets refer to the original string)::

    poly    := [sign] term (sign term)*
    term    := factor ('*'? factor)*
    factor  := INT | '[' INT (',' INT)* ']' | '(' INT (',' INT)* ')'
             | 'x' ['^' INT] | 'a' [INT]

A term holds at most one coefficient literal, one ``x`` power and one dual
variable ``a<i>``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import ParseError

Literal = Union[int, tuple]


@dataclass(frozen=True)
class Term:
    sign: int
    coefficient: Literal  # int, or tuple for bracketed/parenthesized literals
    bracket: str  # '' for plain ints, '[' or '('
    alpha: int  # 0 = no dual variable
    exponent: int


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self):
        ch = self.peek()
        self.pos += 1
        return ch

    def integer(self, what="integer"):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError(f"expected {what}", start)
        return int(self.text[start:self.pos])


def _tuple_literal(sc: _Scanner, close: str):
    items = []
    while True:
        neg = False
        if sc.peek() == "-":
            sc.take()
            neg = True
        v = sc.integer()
        items.append(-v if neg else v)
        ch = sc.peek()
        if ch == ",":
            sc.take()
            continue
        if ch == close:
            sc.take()
            return tuple(items)
        raise ParseError(f"expected ',' or '{close}'", sc.pos)


def _term(sc: _Scanner, sign: int, allow_alpha: bool) -> Term:
    coefficient = None
    bracket = ""
    alpha = 0
    exponent = None
    seen_factor = False
    while True:
        ch = sc.peek()
        start = sc.pos
        if ch and (ch.isdigit() or ch in "[("):
            if coefficient is not None:
                raise ParseError("second coefficient in term", start)
            if ch.isdigit():
                coefficient = sc.integer()
            else:
                sc.take()
                bracket = ch
                coefficient = _tuple_literal(sc, "]" if ch == "[" else ")")
        elif ch == "x":
            if exponent is not None:
                raise ParseError("repeated 'x' in term", start)
            sc.take()
            exponent = 1
            if sc.peek() == "^":
                sc.take()
                exponent = sc.integer("exponent")
        elif ch == "a":
            if not allow_alpha:
                raise ParseError("dual variable not allowed here", start)
            if alpha:
                raise ParseError("product of two dual variables", start)
            sc.take()
            alpha = sc.integer("dual variable index") if sc.peek().isdigit() else 1
            if alpha == 0:
                raise ParseError("dual variables are numbered from 1", start)
        else:
            if not seen_factor:
                raise ParseError("expected term", start)
            break
        seen_factor = True
        if sc.peek() == "*":
            sc.take()
            nxt = sc.peek()
            if not nxt or not (nxt.isdigit() or nxt in "[(xa"):
                raise ParseError("expected factor after '*'", sc.pos)
    return Term(sign, 1 if coefficient is None else coefficient, bracket, alpha,
                0 if exponent is None else exponent)


def parse_terms(text: str, allow_alpha: bool = True) -> list[Term]:
    sc = _Scanner(text)
    terms = []
    sign = 1
    if sc.peek() and sc.peek() in "+-":
        sign = -1 if sc.take() == "-" else 1
    while True:
        terms.append(_term(sc, sign, allow_alpha))
        ch = sc.peek()
        if ch == "":
            return terms
        if ch not in "+-":
            raise ParseError(f"unexpected character {ch!r}", sc.pos)
        sign = -1 if sc.take() == "-" else 1
