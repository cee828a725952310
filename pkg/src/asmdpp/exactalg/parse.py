"""Parse polynomial / rational-function expressions such as ``3/2*x^2*y^-1 - z``."""

from __future__ import annotations

import re

from asmdpp.exactalg.mpoly import MPoly
from asmdpp.exactalg.ratfun import RatFun, simplify, to_ratfun

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str):
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"unexpected character at {pos} in {text!r}")
        num, name, op = m.groups()
        out.append(("num", int(num)) if num else ("name", name) if name else ("op", "^" if op == "**" else op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, op=None):
        tok = self.peek()
        if op is not None and tok != ("op", op):
            raise ValueError(f"expected {op!r}, got {tok}")
        self.i += 1
        return tok

    def expr(self):
        val = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            rhs = self.unary()
            val = val * rhs if op == "*" else to_ratfun(val) / to_ratfun(rhs)
        return val

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            kind, k = self.take()
            if kind != "num":
                raise ValueError("exponents must be integer literals")
            k *= sign
            if k < 0 and not (isinstance(base, MPoly) and base.is_monomial()):
                return to_ratfun(base) ** k
            return base ** k
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return MPoly.const(val)
        if kind == "name":
            return MPoly.var(val)
        if val == "(":
            inner = self.expr()
            self.take(")")
            return inner
        raise ValueError(f"unexpected token {val!r}")


def parse(text: str):
    """Return an MPoly when the expression is a Laurent polynomial, else a RatFun."""
    p = _Parser(str(text))
    val = p.expr()
    if p.i != len(p.toks):
        raise ValueError(f"trailing input in {text!r}")
    return simplify(val) if isinstance(val, RatFun) else val


def parse_poly(text: str) -> MPoly:
    val = parse(text)
    if not isinstance(val, MPoly):
        raise ValueError(f"{text!r} is not a Laurent polynomial")
    return val
