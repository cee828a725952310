"""Normalized rational functions over the rationals.

A :class:`RatFun` stores coprime polynomial numerator and denominator with
non-negative exponents; the denominator's lex-leading coefficient is 1, which
makes the representation unique.  Multivariate gcds are delegated to sympy's
sparse polynomial rings.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from sympy import QQ
from sympy.polys.rings import ring

from asmdpp.errors import DivisionByZero, InexactDivision, PoleHit
from asmdpp.exactalg.mpoly import MPoly, _is_number


@lru_cache(maxsize=64)
def _sympy_ring(vars):
    return ring(",".join(vars), QQ)[0]


def _to_sympy(R, terms):
    return R.from_dict({e: QQ(Fraction(c).numerator, Fraction(c).denominator) for e, c in terms.items()})


def _from_sympy(vars, p) -> MPoly:
    out = {}
    for e, c in p.items():
        c = Fraction(int(c.numerator), int(c.denominator))
        out[tuple(e)] = c.numerator if c.denominator == 1 else c
    return MPoly(vars, out)


def _cancel(num: MPoly, den: MPoly):
    """Remove the gcd of two polynomials with non-negative exponents."""
    vars, a, b = num._align(den)
    if not vars:
        return num, den
    R = _sympy_ring(vars)
    p, q = _to_sympy(R, a).cancel(_to_sympy(R, b))
    return _from_sympy(vars, p), _from_sympy(vars, q)


class RatFun:
    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=1, *, normalized: bool = False):
        num = MPoly.const(num) if not isinstance(num, MPoly) else num
        den = MPoly.const(den) if not isinstance(den, MPoly) else den
        if den.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        self._hash = None
        if normalized:
            self.num, self.den = num, den
            return
        self.num, self.den = self._normalize(num, den)

    @staticmethod
    def _normalize(num: MPoly, den: MPoly):
        if num.is_zero():
            return MPoly.const(0), MPoly.const(1)
        vars, a, b = num._align(den)
        n = len(vars)
        # clear Laurent exponents jointly
        shift = [min(min((e[i] for e in a), default=0), min((e[i] for e in b), default=0)) for i in range(n)]
        if any(shift):
            a = {tuple(x - s for x, s in zip(e, shift)): c for e, c in a.items()}
            b = {tuple(x - s for x, s in zip(e, shift)): c for e, c in b.items()}
        num, den = MPoly._raw(vars, a), MPoly._raw(vars, b)
        if den.is_monomial():
            # gcd with a monomial is a monomial: strip common variable powers directly
            (eb, _), = den.terms.items()
            common = [min(eb[i], min(e[i] for e in a)) for i in range(n)]
            if any(common):
                num = MPoly._raw(vars, {tuple(x - s for x, s in zip(e, common)): c for e, c in a.items()})
                den = MPoly._raw(vars, {tuple(x - s for x, s in zip(e, common)): c for e, c in b.items()})
        elif not den.is_constant():
            num, den = _cancel(num, den)
        lc = den.leading_term()[1]
        if lc != 1:
            num, den = num / lc, den / lc
        return num.pruned(), den.pruned()

    # -- coercion -----------------------------------------------------
    @staticmethod
    def _coerce(obj):
        if isinstance(obj, RatFun):
            return obj
        if isinstance(obj, MPoly):
            return RatFun(obj)
        if _is_number(obj):
            return RatFun(MPoly.const(obj), normalized=True)
        return None

    @property
    def vars(self):
        return tuple(sorted(set(self.num.vars) | set(self.den.vars)))

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den)
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den, normalized=True)

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
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFun":
        if self.num.is_zero():
            raise DivisionByZero("inverse of zero")
        return RatFun(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.num.is_zero():
            raise DivisionByZero("division by zero rational function")
        return RatFun(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        return RatFun(self.num ** k, self.den ** k, normalized=True)

    # -- comparison ---------------------------------------------------
    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.num) if self.den == 1 else hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return not self.num.is_zero()

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_monomial()

    def is_constant(self) -> bool:
        return self.den.is_constant() and self.num.is_constant()

    def constant_value(self):
        return self.num.constant_value()

    def to_mpoly(self) -> MPoly:
        """Laurent polynomial form; fails unless the denominator is a monomial."""
        if not self.den.is_monomial():
            raise InexactDivision(f"{self} is not a Laurent polynomial")
        return self.num / self.den

    def evaluate(self, values: Mapping[str, object]):
        d = self.den.evaluate(values)
        if d == 0:
            raise PoleHit(f"denominator of {self} vanishes")
        return self.num.evaluate(values) / d

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFun({str(self)!r})"


def to_ratfun(obj) -> RatFun:
    r = RatFun._coerce(obj)
    if r is None:
        raise TypeError(f"cannot interpret {obj!r} as a rational function")
    return r


def simplify(obj):
    """Demote a RatFun to an MPoly when its denominator is a monomial."""
    if isinstance(obj, RatFun) and obj.is_polynomial():
        return obj.to_mpoly()
    return obj


def substitute(f, bindings: Mapping[str, object]) -> RatFun:
    """Replace variables by rationals, polynomials or rational functions.

    Unbound variables are left alone.  Raises :class:`PoleHit` when the
    denominator evaluates to zero.
    """
    f = to_ratfun(f)
    values = {}
    lift = any(isinstance(b, RatFun) for b in bindings.values())
    for v in f.vars:
        b = bindings.get(v, MPoly.var(v))
        if _is_number(b):
            b = Fraction(b)
        elif lift:
            b = to_ratfun(b)
        values[v] = b
    den = f.den.evaluate(values) if f.den.vars else f.den.constant_value()
    if den == 0:
        raise PoleHit(f"denominator {f.den} vanishes under {dict(bindings)}")
    num = f.num.evaluate(values) if f.num.vars else f.num.constant_value()
    return to_ratfun(num) / to_ratfun(den)
