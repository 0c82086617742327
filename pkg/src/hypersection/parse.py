"""Text grammar for polynomials in x, y, z.

    poly   := term (('+'|'-') term)*
    term   := coeff | [coeff '*'] factor ('*' factor)*
    factor := var ['^' nat]
    coeff  := nat ['/' nat]
    var    := 'x' | 'y' | 'z'

Whitespace is ignored and the first term may carry a leading '-'.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from .polycore import DEFAULT_ORDER, DEFAULT_VARIABLES, MonomialOrder, Polynomial, format_polynomial

__all__ = ["PolynomialSyntaxError", "parse_polynomial", "format_polynomial"]

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))", re.DOTALL)


class PolynomialSyntaxError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("nat", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        else:
            tokens.append(("op", m.group(3), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: Sequence[str], order: MonomialOrder):
        self.text = text
        self.ring = tuple(ring)
        self.order = order
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        return PolynomialSyntaxError(message, self.text, tok[2])

    def expect_op(self, op):
        tok = self.take()
        if tok != ("op", op, tok[2]):
            raise self.error(f"expected {op!r}", tok)

    def nat(self, what="number"):
        tok = self.take()
        if tok[0] != "nat":
            raise self.error(f"expected {what}", tok)
        return int(tok[1])

    def parse(self) -> Polynomial:
        terms: dict[tuple[int, ...], Fraction] = {}
        sign = 1
        if self.peek()[:2] == ("op", "-"):
            self.take()
            sign = -1
        while True:
            coeff, mono = self.term()
            terms[mono] = terms.get(mono, 0) + sign * coeff
            tok = self.peek()
            if tok[0] == "end":
                break
            if tok[0] == "op" and tok[1] in "+-":
                self.take()
                sign = 1 if tok[1] == "+" else -1
                continue
            raise self.error(f"unexpected {tok[1]!r}")
        return Polynomial(terms, self.ring, self.order)

    def term(self):
        exps = [0] * len(self.ring)
        coeff = Fraction(1)
        if self.peek()[0] == "nat":
            num = self.nat()
            den = 1
            if self.peek()[:2] == ("op", "/"):
                self.take()
                den = self.nat("denominator")
                if den == 0:
                    raise self.error("zero denominator", self.tokens[self.i - 1])
            coeff = Fraction(num, den)
            if self.peek()[:2] != ("op", "*"):
                return coeff, tuple(exps)
            self.take()
        self.factor(exps)
        while self.peek()[:2] == ("op", "*"):
            self.take()
            self.factor(exps)
        return coeff, tuple(exps)

    def factor(self, exps):
        tok = self.take()
        if tok[0] != "name":
            raise self.error("expected a variable", tok)
        if tok[1] not in self.ring:
            raise self.error(f"unknown variable {tok[1]!r}", tok)
        e = 1
        if self.peek()[:2] == ("op", "^"):
            self.take()
            nxt = self.peek()
            if nxt[0] != "nat":
                raise self.error("malformed exponent", nxt)
            e = self.nat()
        exps[self.ring.index(tok[1])] += e


def parse_polynomial(
    text: str, ring: Sequence[str] = DEFAULT_VARIABLES, order: MonomialOrder = DEFAULT_ORDER
) -> Polynomial:
    """Parse ``text`` into a canonical :class:`Polynomial`.

    >>> str(parse_polynomial("2*x*y - 3/2*z^2"))
    '2*x*y - 3/2*z^2'
    """
    if not text.strip():
        raise PolynomialSyntaxError("empty polynomial", text, 0)
    return _Parser(text, ring, order).parse()
