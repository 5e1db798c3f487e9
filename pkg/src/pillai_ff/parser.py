"""Recursive descent parser for rational expressions in x.

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('-' | '+') unary | power
    power  := base ('^' ['-'] integer)?
    base   := integer | 'x' | '(' expr ')'

Rational literals are written as quotients of integers ("3/4"); decimals are
rejected to keep every value exact.
"""

from __future__ import annotations

import re

from .errors import DivisionByZeroInExpression, ParseError
from .field import X, RatFunc, as_ratfunc, rf_pow

_TOKEN = re.compile(r"\s*(?:(\d+)|(.)|$)")
_X = as_ratfunc(X)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m.group(1) is not None:
                self.tokens.append(("int", m.group(1), m.start(1)))
            elif m.group(2) is not None:
                self.tokens.append(("op", m.group(2), m.start(2)))
            pos = m.end()
        self.tokens.append(("end", "", len(text)))
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def accept(self, op: str) -> bool:
        kind, value, _ = self.peek()
        if kind == "op" and value == op:
            self.i += 1
            return True
        return False

    def fail(self, what: str):
        kind, value, pos = self.peek()
        found = "end of input" if kind == "end" else repr(value)
        raise ParseError(f"expected {what}, found {found}", pos)

    def parse(self) -> RatFunc:
        value = self.expr()
        if self.peek()[0] != "end":
            self.fail("operator")
        return value

    def expr(self) -> RatFunc:
        value = self.term()
        while True:
            if self.accept("+"):
                value = value + self.term()
            elif self.accept("-"):
                value = value - self.term()
            else:
                return value

    def term(self) -> RatFunc:
        value = self.unary()
        while True:
            if self.accept("*"):
                value = value * self.unary()
            elif self.accept("/"):
                pos = self.peek()[2]
                divisor = self.unary()
                if not divisor:
                    raise DivisionByZeroInExpression(f"division by zero at offset {pos}")
                value = value / divisor
            else:
                return value

    def unary(self) -> RatFunc:
        if self.accept("-"):
            return -self.unary()
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self) -> RatFunc:
        base = self.base()
        if not self.accept("^"):
            return base
        negative = self.accept("-")
        kind, value, pos = self.peek()
        if kind != "int":
            self.fail("integer exponent")
        self.take()
        k = -int(value) if negative else int(value)
        if k < 0 and not base:
            raise DivisionByZeroInExpression(f"zero raised to a negative power at offset {pos}")
        return rf_pow(base, k)

    def base(self) -> RatFunc:
        kind, value, pos = self.peek()
        if kind == "int":
            self.take()
            return RatFunc.constant(int(value))
        if kind == "op" and value == "x":
            self.take()
            return _X
        if self.accept("("):
            inner = self.expr()
            if not self.accept(")"):
                self.fail("')'")
            return inner
        self.fail("integer, 'x' or '('")


def parse_expression(text: str) -> RatFunc:
    """Parse ``text`` into a canonical rational function of x."""
    return _Parser(text).parse()
