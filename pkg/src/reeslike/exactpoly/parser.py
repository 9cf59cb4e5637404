"""Recursive-descent parser for polynomial expressions.

Grammar (whitespace is insignificant)::

    expr    := sign? term (("+" | "-") term)*
    term    := power (("*" | "/")? power)*        # juxtaposition multiplies
    power   := atom (("^" | "**") INT)?
    atom    := NUMBER | NAME | "(" expr ")" | "-" power

Division is allowed only by nonzero constants.  Names like ``x_1`` or
``x_{1}`` are normalized; an unknown name is split greedily into ring variables
(``x1x2`` -> ``x1*x2``) before it is reported as unknown.
"""

from __future__ import annotations

import re

from ..errors import ParseError
from .ring import GradedPolyRing, Polynomial, normalize_name

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_]*(?:\{[0-9,\s]*\})?)|(?P<op>\*\*|[-+*/^()]))"
)


def tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            skip = len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[pos + skip]!r}", text, pos + skip)
        kind = m.lastgroup
        start = m.start(kind)
        out.append((kind, m.group(kind), start))
        pos = m.end()
    out.append(("end", "", n))
    return out


class _Parser:
    def __init__(self, text: str, ring: GradedPolyRing):
        self.text = text
        self.ring = ring
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, self.text, tok[2])

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            self.fail("empty expression")
        f = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return f

    def expr(self):
        sign = 1
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = -1 if self.take()[1] == "-" else 1
        f = self.term()
        if sign < 0:
            f = -f
        while self.peek()[0] == "op" and self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            g = self.term()
            f = f + g if op == "+" else f - g
        return f

    def starts_atom(self):
        kind, val, _ = self.peek()
        return kind in ("num", "name") or (kind == "op" and val == "(")

    def term(self):
        f = self.power()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                f = f * self.power()
            elif kind == "op" and val == "/":
                tok = self.take()
                g = self.power()
                if not g.is_constant or g.is_zero:
                    if g.is_zero:
                        self.fail("division by zero", tok)
                    self.fail("division by a non-constant", tok)
                try:
                    f = f.scale(self.ring.field.inv(g.constant_value()))
                except ZeroDivisionError:
                    self.fail("division by zero", tok)
            elif self.starts_atom():
                f = f * self.power()
            else:
                return f

    def power(self):
        base = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val in ("^", "**"):
            self.take()
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "(":
                self.take()
                if self.peek()[0] != "num":
                    self.fail("exponent must be a non-negative integer")
                e = int(self.take()[1])
                if self.peek()[1] != ")":
                    self.fail("expected ')'")
                self.take()
            elif tok[0] == "num":
                e = int(self.take()[1])
            else:
                self.fail("exponent must be a non-negative integer")
            return base ** e
        return base

    def atom(self):
        kind, val, pos = self.peek()
        if kind == "num":
            self.take()
            return self.ring.const(int(val))
        if kind == "name":
            self.take()
            return self.variable(val, pos)
        if kind == "op" and val == "(":
            self.take()
            f = self.expr()
            if self.peek()[1] != ")" or self.peek()[0] != "op":
                self.fail("expected ')'")
            self.take()
            return f
        if kind == "op" and val in ("-", "+"):
            self.take()
            f = self.power()
            return -f if val == "-" else f
        if kind == "end":
            self.fail("unexpected end of input")
        self.fail(f"unexpected {val!r}")

    def variable(self, name, pos):
        ring = self.ring
        real = ring.resolve(name)
        if real is not None:
            return ring.var(real)
        parts = split_name(normalize_name(name), ring)
        if parts is None:
            raise ParseError(f"unknown variable {name!r}", self.text, pos)
        f = ring.one
        for v in parts:
            f = f * ring.var(v)
        return f


def split_name(key: str, ring: GradedPolyRing):
    """Split a normalized name into ring variables, longest match first."""
    table = ring._lookup
    lengths = sorted({len(k) for k in table}, reverse=True)
    memo = {}

    def go(start):
        if start == len(key):
            return []
        if start in memo:
            return memo[start]
        result = None
        for n in lengths:
            piece = key[start:start + n]
            if len(piece) == n and piece in table:
                rest = go(start + n)
                if rest is not None:
                    result = [table[piece]] + rest
                    break
        memo[start] = result
        return result

    return go(0)


def parse_polynomial(src: str, ring: GradedPolyRing) -> Polynomial:
    if not isinstance(src, str):
        raise TypeError("expected text")
    return _Parser(src, ring).parse()


def split_generators(text: str) -> list[str]:
    """Split a comma-separated generator list, ignoring commas inside braces or parentheses."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts if p.strip()]
