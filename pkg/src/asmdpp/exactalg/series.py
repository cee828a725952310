"""Truncated formal power series in one grading variable."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

from asmdpp.errors import DivisionByZero, NotExpandable
from asmdpp.exactalg.mpoly import MPoly, _is_number
from asmdpp.exactalg.ratfun import RatFun, simplify, to_ratfun


def _ring(c):
    if _is_number(c):
        return MPoly.const(c)
    return c


def _divide(a, b):
    """a / b, staying polynomial when b is a monomial or constant."""
    if isinstance(b, MPoly) and isinstance(a, MPoly) and (b.is_monomial()):
        return a / b
    if _is_number(b):
        return a / b
    if isinstance(b, MPoly) and b.is_constant():
        return a / b.constant_value()
    if isinstance(a, MPoly) and isinstance(b, MPoly):
        return simplify(RatFun(a, b))
    return a / b


class GradedSeries:
    """``sum_{k <= order} coeffs[k] * gvar**k`` modulo ``gvar**(order+1)``."""

    __slots__ = ("gvar", "order", "coeffs")

    def __init__(self, gvar: str, order: int, coeffs: Sequence = ()):
        if order < 0:
            raise ValueError("order must be non-negative")
        cs: List = [_ring(c) for c in list(coeffs)[: order + 1]]
        cs += [MPoly.const(0)] * (order + 1 - len(cs))
        self.gvar, self.order, self.coeffs = gvar, order, cs

    @classmethod
    def constant(cls, gvar: str, order: int, c) -> "GradedSeries":
        return cls(gvar, order, [c])

    @classmethod
    def variable(cls, gvar: str, order: int) -> "GradedSeries":
        return cls(gvar, order, [0, 1])

    @classmethod
    def from_poly(cls, p, gvar: str, order: int) -> "GradedSeries":
        """Series of a polynomial (or rational function) in ``gvar``."""
        if isinstance(p, RatFun) and not p.is_polynomial():
            return series_from_ratfun(p, gvar, order)
        p = _ring(p.to_mpoly() if isinstance(p, RatFun) else p)
        parts = p.coeffs_in(gvar)
        if parts and min(parts) < 0:
            raise NotExpandable(f"{p} has negative powers of {gvar}")
        return cls(gvar, order, [parts.get(k, MPoly.const(0)) for k in range(order + 1)])

    def _coerce(self, other):
        if isinstance(other, GradedSeries):
            if other.gvar != self.gvar:
                raise ValueError("series in different grading variables")
            return other
        if _is_number(other) or isinstance(other, (MPoly, RatFun)) or hasattr(other, "a1"):
            if isinstance(other, (MPoly, RatFun)) and self.gvar in other.vars:
                return GradedSeries.from_poly(other, self.gvar, self.order)
            return GradedSeries(self.gvar, self.order, [other])
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = min(self.order, other.order)
        return GradedSeries(self.gvar, n, [a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return GradedSeries(self.gvar, self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        nz_a = [i for i in range(n + 1) if a[i] != 0]
        nz_b = [j for j in range(n + 1) if b[j] != 0]
        out = [MPoly.const(0)] * (n + 1)
        for i in nz_a:
            for j in nz_b:
                if i + j > n:
                    break
                out[i + j] = out[i + j] + a[i] * b[j]
        return GradedSeries(self.gvar, n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = GradedSeries(self.gvar, self.order, [1])
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def inverse(self) -> "GradedSeries":
        c0 = self.coeffs[0]
        if c0 == 0:
            raise NotExpandable("series with zero constant term is not invertible")
        out = [_divide(MPoly.const(1), c0)]
        for k in range(1, self.order + 1):
            s = MPoly.const(0)
            for j in range(1, k + 1):
                if self.coeffs[j] != 0:
                    s = s + self.coeffs[j] * out[k - j]
            out.append(_divide(-s, c0))
        return GradedSeries(self.gvar, self.order, out)

    def __truediv__(self, other):
        if _is_number(other):
            if other == 0:
                raise DivisionByZero("division by zero")
            return GradedSeries(self.gvar, self.order, [c / Fraction(other) for c in self.coeffs])
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def valuation(self):
        for k, c in enumerate(self.coeffs):
            if c != 0:
                return k
        return None

    def shift_down(self, k: int = 1) -> "GradedSeries":
        """Exact division by ``gvar**k``; the order drops by ``k``."""
        if any(c != 0 for c in self.coeffs[:k]):
            raise NotExpandable(f"series is not divisible by {self.gvar}^{k}")
        return GradedSeries(self.gvar, self.order - k, self.coeffs[k:])

    def shift_up(self, k: int = 1) -> "GradedSeries":
        return GradedSeries(self.gvar, self.order, [0] * k + self.coeffs)

    def truncated(self, order: int) -> "GradedSeries":
        return GradedSeries(self.gvar, min(order, self.order), self.coeffs)

    def map(self, fn) -> "GradedSeries":
        return GradedSeries(self.gvar, self.order, [fn(c) for c in self.coeffs])

    def exp(self) -> "GradedSeries":
        """exp of a series without constant term, via f' = f * s'."""
        if self.coeffs[0] != 0:
            raise NotExpandable("exp needs a zero constant term")
        n = self.order
        out = [MPoly.const(1)] + [MPoly.const(0)] * n
        for k in range(1, n + 1):
            s = MPoly.const(0)
            for j in range(1, k + 1):
                if self.coeffs[j] != 0:
                    s = s + j * self.coeffs[j] * out[k - j]
            out[k] = s / k
        return GradedSeries(self.gvar, n, out)

    def to_poly(self):
        g = MPoly.var(self.gvar)
        total = MPoly.const(0)
        for k, c in enumerate(self.coeffs):
            total = total + c * g ** k
        return total

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = min(self.order, other.order)
        return all((a - b) == 0 for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1]))

    __hash__ = None

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __getitem__(self, k: int):
        if k > self.order:
            raise IndexError(f"coefficient {k} beyond order {self.order}")
        return self.coeffs[k]

    def __repr__(self):
        body = " + ".join(f"({c})*{self.gvar}^{k}" for k, c in enumerate(self.coeffs) if c != 0) or "0"
        return f"GradedSeries({body} + O({self.gvar}^{self.order + 1}))"


def series_from_ratfun(f, gvar: str, order: int) -> GradedSeries:
    """Taylor coefficients 0..order of ``f`` in ``gvar``, computed exactly."""
    f = to_ratfun(f)
    num = f.num.coeffs_in(gvar)
    den = f.den.coeffs_in(gvar)
    d0 = den.get(0)
    if d0 is None or d0.is_zero():
        raise NotExpandable(f"denominator of {f} vanishes at {gvar}=0")
    if num and min(num) < 0:
        raise NotExpandable(f"{f} has negative powers of {gvar}")
    out = []
    for k in range(order + 1):
        s = num.get(k, MPoly.const(0))
        for j, dj in den.items():
            if 0 < j <= k:
                s = s - dj * out[k - j]
        out.append(_divide(s, d0))
    return GradedSeries(gvar, order, out)
