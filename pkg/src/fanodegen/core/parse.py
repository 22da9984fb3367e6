"""Text grammar for polynomials.

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*'? factor)*
    factor := atom ('^' INT)?
    atom   := NUMBER ['/' NUMBER] | NAME ['[' INT ']'] | '(' expr ')'
"""
from __future__ import annotations

import re
from fractions import Fraction

from ..errors import PolynomialSyntaxError, UnknownVariable
from .poly import Polynomial
from .ring import PolyRing

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*(?:\[\d+\])?)|(?P<op>[-+*^/()]))"
)


def _tokenize(text: str):
    pos = 0
    toks = []
    n = len(text)
    while pos < n:
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            j = pos
            while j < n and text[j].isspace():
                j += 1
            raise PolynomialSyntaxError(f"unexpected character {text[j]!r}", _byte(text, j))
        kind = m.lastgroup
        start = m.start(kind)
        toks.append((kind, m.group(kind), start))
        pos = m.end()
    toks.append(("end", "", n))
    return toks


def _byte(text: str, i: int) -> int:
    return len(text[:i].encode("utf-8"))


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.text = text
        self.ring = ring
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise PolynomialSyntaxError(msg, _byte(self.text, tok[2]))

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            self.error("empty polynomial")
        p = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected token {self.peek()[1]!r}")
        return p

    def expr(self) -> Polynomial:
        sign = 1
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = -1 if self.take()[1] == "-" else 1
        acc = self.term() * sign
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = acc * self.factor()
            elif kind in ("num", "name") or (kind == "op" and val == "("):
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> Polynomial:
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            kind, val, _ = self.peek()
            if kind != "num":
                self.error("expected integer exponent")
            self.take()
            return base ** int(val)
        return base

    def atom(self) -> Polynomial:
        kind, val, _ = tok = self.take()
        ring = self.ring
        if kind == "num":
            value = Fraction(int(val))
            if self.peek()[0] == "op" and self.peek()[1] == "/":
                self.take()
                k2, v2, _ = self.peek()
                if k2 != "num":
                    self.error("expected denominator")
                self.take()
                if int(v2) == 0:
                    self.error("zero denominator")
                value = Fraction(int(val), int(v2))
            return ring.constant(value)
        if kind == "name":
            if val not in ring:
                raise UnknownVariable(val, _byte(self.text, tok[2]))
            return ring.gen(val)
        if kind == "op" and val == "(":
            inner = self.expr()
            if self.peek()[1] != ")":
                self.error("expected ')'")
            self.take()
            return inner
        self.error(f"unexpected token {val!r}" if kind != "end" else "unexpected end of input", tok)


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    return _Parser(text, ring).parse()


def parse_polynomials(lines, ring: PolyRing) -> list:
    return [parse_polynomial(line, ring) for line in lines if line.strip()]
