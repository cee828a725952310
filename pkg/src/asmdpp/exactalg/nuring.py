"""The quadratic extension ring generated by nu with x*nu*(1-nu) = nu + y*(1-nu).

Elements are ``a0 + a1*nu`` with coefficients in MPoly (Laurent in x) or
RatFun.  Products are reduced eagerly with

    nu**2 = ((x + y - 1)*nu - y) / x,

so the representation always has degree at most one in nu.
"""

from __future__ import annotations

from typing import Mapping

from asmdpp.errors import DivisionByZero
from asmdpp.exactalg.mpoly import MPoly, _is_number
from asmdpp.exactalg.ratfun import RatFun

X = MPoly.var("x")
Y = MPoly.var("y")
_XINV = X ** -1
# nu**2 = P*nu + Q
P = (X + Y - 1) * _XINV
Q = -Y * _XINV


def _coef(c):
    if isinstance(c, (MPoly, RatFun)):
        return c
    if _is_number(c):
        return MPoly.const(c)
    raise TypeError(f"bad NuElem coefficient {c!r}")


class NuElem:
    __slots__ = ("a0", "a1")

    def __init__(self, a0=0, a1=0):
        self.a0 = _coef(a0)
        self.a1 = _coef(a1)

    @classmethod
    def nu(cls) -> "NuElem":
        return cls(0, 1)

    @staticmethod
    def _coerce(obj):
        if isinstance(obj, NuElem):
            return obj
        if isinstance(obj, (MPoly, RatFun)) or _is_number(obj):
            return NuElem(obj, 0)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return NuElem(self.a0 + other.a0, self.a1 + other.a1)

    __radd__ = __add__

    def __neg__(self):
        return NuElem(-self.a0, -self.a1)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return NuElem(self.a0 - other.a0, self.a1 - other.a1)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if _is_number(other) or isinstance(other, (MPoly, RatFun)):
            return NuElem(self.a0 * other, self.a1 * other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a0, a1, b0, b1 = self.a0, self.a1, other.a0, other.a1
        top = a1 * b1
        if top.is_zero():
            return NuElem(a0 * b0, a0 * b1 + a1 * b0)
        return NuElem(a0 * b0 + top * Q, a0 * b1 + a1 * b0 + top * P)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (NuElem(1) / self) ** (-k)
        result, base = NuElem(1), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def conjugate(self) -> "NuElem":
        """Image under nu -> P - nu (the other root)."""
        return NuElem(self.a0 + self.a1 * P, -self.a1)

    def norm(self):
        """``self * self.conjugate()``, which is nu-free."""
        return self.a0 * self.a0 + self.a0 * self.a1 * P - self.a1 * self.a1 * Q

    def __truediv__(self, other):
        if _is_number(other) or isinstance(other, (MPoly, RatFun)):
            if other == 0:
                raise DivisionByZero("division by zero")
            return NuElem(self.a0 / other, self.a1 / other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = other.norm()
        if n == 0:
            raise DivisionByZero(f"{other} is a zero divisor")
        num = self * other.conjugate()
        return NuElem(num.a0 / n, num.a1 / n)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (self.a0 - other.a0) == 0 and (self.a1 - other.a1) == 0

    def __hash__(self):
        return hash((self.a0, self.a1)) if self.a1 != 0 else hash(self.a0)

    def __bool__(self):
        return bool(self.a0) or bool(self.a1)

    def is_zero(self) -> bool:
        return not self

    def is_nu_free(self) -> bool:
        return self.a1 == 0

    def evaluate(self, nu_value, values: Mapping[str, object]):
        """Specialize x, y, ... and nu to concrete values."""
        def ev(c):
            return c.evaluate(values) if c.vars else c.constant_value()
        return ev(self.a0) + ev(self.a1) * nu_value

    def __str__(self):
        if self.a1 == 0:
            return str(self.a0)
        return f"({self.a0}) + ({self.a1})*nu"

    def __repr__(self):
        return f"NuElem({str(self)!r})"


NU = NuElem.nu()


def one_minus_nu_inverse() -> NuElem:
    """1/(1 - nu) = 1 - y + x*nu, a consequence of the defining relation."""
    return NuElem(1 - Y, X)
