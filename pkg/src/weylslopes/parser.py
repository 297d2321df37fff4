"""Parser for the operator expression grammar.

Variables are ``x<k>`` and ``Dx<k>`` (1-based), literals are integers
``p`` or rationals ``p/q``, operators are ``+ - * ^`` with parentheses;
``^`` binds tighter than ``*``, which binds tighter than ``+``/``-``;
``*`` is noncommutative concatenation in source order and whitespace is
ignored.  Unary minus is accepted where a summand may start.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, Optional, Tuple

from .weyl import WeylPoly


class OperatorSyntaxError(ValueError):
    """Malformed operator expression; carries the source position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([-+*^()/]))")
_VAR = re.compile(r"(Dx|x)([1-9][0-9]*)$")


def _tokenize(text: str) -> List[Tuple[str, object, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            break
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        else:
            tokens.append((m.group(3), m.group(3), m.start(3)))
        pos = m.end()
    rest = text[pos:].strip()
    if rest:
        raise OperatorSyntaxError(f"unexpected character {rest[0]!r}", pos)
    return tokens


class _Parser:
    def __init__(self, tokens, n: int):
        self.tokens = tokens
        self.n = n
        self.i = 0

    def _peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, -1)

    def _next(self):
        tok = self._peek()
        self.i += 1
        return tok

    def _fail(self, message: str, tok=None):
        tok = tok or self._peek()
        pos = tok[2] if tok[2] >= 0 else 0
        raise OperatorSyntaxError(message, pos)

    def parse(self) -> WeylPoly:
        value = self.sum()
        if self._peek()[0] is not None:
            self._fail("trailing input")
        return value

    def sum(self) -> WeylPoly:
        sign = 1
        kind, _, _ = self._peek()
        if kind in ("+", "-"):
            self._next()
            sign = -1 if kind == "-" else 1
        value = self.product() * sign
        while True:
            kind, _, _ = self._peek()
            if kind == "+":
                self._next()
                value = value + self.product()
            elif kind == "-":
                self._next()
                value = value - self.product()
            else:
                return value

    def product(self) -> WeylPoly:
        value = self.power()
        while self._peek()[0] == "*":
            self._next()
            value = value * self.power()
        return value

    def power(self) -> WeylPoly:
        base = self.atom()
        if self._peek()[0] == "^":
            self._next()
            kind, val, _ = self._next()
            if kind != "int":
                self._fail("exponent must be a non-negative integer")
            return base**val
        return base

    def atom(self) -> WeylPoly:
        kind, val, pos = self._next()
        if kind == "int":
            if self._peek()[0] == "/":
                self._next()
                kind2, den, _ = self._next()
                if kind2 != "int":
                    self._fail("rational literal needs an integer denominator")
                if den == 0:
                    self._fail("zero denominator")
                return WeylPoly.constant(Fraction(val, den), self.n)
            return WeylPoly.constant(val, self.n)
        if kind == "name":
            m = _VAR.match(val)
            if not m:
                raise OperatorSyntaxError(f"unknown variable name {val!r}", pos)
            index = int(m.group(2))
            if index > self.n:
                raise OperatorSyntaxError(
                    f"variable index {index} exceeds n={self.n}", pos
                )
            if m.group(1) == "x":
                return WeylPoly.x(index, self.n)
            return WeylPoly.d(index, self.n)
        if kind == "(":
            value = self.sum()
            if self._next()[0] != ")":
                self._fail("missing closing parenthesis")
            return value
        if kind is None:
            raise OperatorSyntaxError("unexpected end of input", len_hint(self.tokens))
        self._fail(f"unexpected token {val!r}", (kind, val, pos))
        raise AssertionError  # unreachable


def len_hint(tokens) -> int:
    return tokens[-1][2] + 1 if tokens else 0


def parse_operator(text: str, n: int) -> WeylPoly:
    """Parse an expression into a normally ordered operator in n variables."""
    if n < 1:
        raise ValueError("need at least one variable")
    tokens = _tokenize(text)
    if not tokens:
        raise OperatorSyntaxError("empty expression", 0)
    return _Parser(tokens, n).parse()


def infer_nvars(texts) -> int:
    """Largest variable index mentioned across expressions (at least 1)."""
    best = 1
    for text in texts:
        for m in re.finditer(r"(?:Dx|x)([1-9][0-9]*)", text):
            best = max(best, int(m.group(1)))
    return best


def read_ideal_file(path, n: Optional[int] = None):
    """One operator per line, '#' comments, UTF-8; returns (operators, n)."""
    with open(path, encoding="utf-8") as fh:
        lines = []
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if line:
                lines.append(line)
    if not lines:
        raise ValueError(f"no operators found in {path}")
    if n is None:
        n = infer_nvars(lines)
    return [parse_operator(line, n) for line in lines], n
