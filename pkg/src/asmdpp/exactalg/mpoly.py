"""Sparse multivariate Laurent polynomials with exact rational coefficients.

Variables are identified by name.  Every polynomial carries a sorted tuple of
variable names and a dict mapping exponent tuples (signed ints) to nonzero
``int``/``Fraction`` coefficients.  Operands over different variable sets are
embedded into the union automatically.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Mapping, Tuple

from asmdpp.errors import DivisionByZero, InexactDivision

Exps = Tuple[int, ...]
Number = (int, Fraction)


def _is_number(obj) -> bool:
    return isinstance(obj, Rational) and not isinstance(obj, bool)


def _fmt_coeff(c) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _qdiv(a, b):
    if isinstance(a, int) and isinstance(b, int) and a % b == 0:
        return a // b
    return Fraction(a) / b


class MPoly:
    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, vars: Iterable[str] = (), terms: Mapping[Exps, object] | None = None):
        vars = tuple(vars)
        if list(vars) != sorted(set(vars)):
            order = sorted(set(vars))
            pos = [order.index(v) for v in vars]
            new: Dict[Exps, object] = {}
            for e, c in (terms or {}).items():
                ne = [0] * len(order)
                for p, k in zip(pos, e):
                    ne[p] += k
                ne = tuple(ne)
                new[ne] = new.get(ne, 0) + c
            terms, vars = new, tuple(order)
        self.vars: Tuple[str, ...] = vars
        self.terms: Dict[Exps, object] = {}
        n = len(vars)
        for e, c in (terms or {}).items():
            if c != 0:
                if len(e) != n:
                    raise ValueError("exponent vector length does not match variables")
                self.terms[tuple(e)] = c
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def _raw(cls, vars, terms) -> "MPoly":
        obj = object.__new__(cls)
        obj.vars = vars
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> "MPoly":
        if isinstance(c, MPoly):
            return c
        if not _is_number(c):
            raise TypeError(f"cannot make a constant polynomial from {c!r}")
        return cls._raw((), {(): c} if c != 0 else {})

    @classmethod
    def var(cls, name: str) -> "MPoly":
        return cls._raw((name,), {(1,): 1})

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coeff=1) -> "MPoly":
        names = tuple(sorted(exps))
        return cls._raw(names, {tuple(exps[v] for v in names): coeff} if coeff != 0 else {})

    # -- variable universe -------------------------------------------
    def embed(self, vars: Tuple[str, ...]) -> Dict[Exps, object]:
        """Terms re-indexed over the sorted superset ``vars``."""
        if vars == self.vars:
            return self.terms
        pos = [vars.index(v) for v in self.vars]
        n = len(vars)
        out = {}
        for e, c in self.terms.items():
            ne = [0] * n
            for p, k in zip(pos, e):
                ne[p] = k
            out[tuple(ne)] = c
        return out

    def _align(self, other: "MPoly"):
        if self.vars == other.vars:
            return self.vars, self.terms, other.terms
        vars = tuple(sorted(set(self.vars) | set(other.vars)))
        return vars, self.embed(vars), other.embed(vars)

    def used_vars(self) -> Tuple[str, ...]:
        return tuple(v for i, v in enumerate(self.vars) if any(e[i] for e in self.terms))

    def pruned(self) -> "MPoly":
        used = self.used_vars()
        if used == self.vars:
            return self
        idx = [self.vars.index(v) for v in used]
        return MPoly._raw(used, {tuple(e[i] for i in idx): c for e, c in self.terms.items()})

    # -- predicates ---------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return next(iter(self.terms.values()), 0)

    def constant_term(self):
        return self.terms.get((0,) * len(self.vars), 0)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    # -- arithmetic ---------------------------------------------------
    @staticmethod
    def _coerce(obj):
        if isinstance(obj, MPoly):
            return obj
        if _is_number(obj):
            return MPoly.const(obj)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        vars, a, b = self._align(other)
        out = dict(a)
        for e, c in b.items():
            s = out.get(e, 0) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return MPoly._raw(vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __pos__(self):
        return self

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
        if _is_number(other):
            if other == 0:
                return MPoly._raw(self.vars, {})
            return MPoly._raw(self.vars, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        vars, a, b = self._align(other)
        if len(a) > len(b):
            a, b = b, a
        out: Dict[Exps, object] = {}
        get = out.get
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = get(e, 0) + ca * cb
        return MPoly._raw(vars, {e: c for e, c in out.items() if c != 0})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_monomial():
                raise InexactDivision(f"negative power of non-monomial {self}")
            (e, c), = self.terms.items()
            return MPoly._raw(self.vars, {tuple(k * x for x in e): Fraction(1) / c ** (-k)})
        result = MPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        """Exact division; raises :class:`InexactDivision` if the quotient is not a Laurent polynomial."""
        if _is_number(other):
            if other == 0:
                raise DivisionByZero("division by zero")
            inv = Fraction(1) / other
            return MPoly._raw(self.vars, {e: c * inv for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.exact_div(other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other.exact_div(self)

    def exact_div(self, other: "MPoly") -> "MPoly":
        if other.is_zero():
            raise DivisionByZero("division by the zero polynomial")
        if other.is_constant():
            return self / other.constant_value()
        vars, a, b = self._align(other)
        if other.is_monomial():
            (eb, cb), = b.items()
            inv = Fraction(1) / cb
            return MPoly._raw(vars, {tuple(x - y for x, y in zip(e, eb)): c * inv for e, c in a.items()})
        if not a:
            return MPoly._raw(vars, {})
        n = len(vars)
        sa = [min(e[i] for e in a) for i in range(n)]
        sb = [min(e[i] for e in b) for i in range(n)]
        rem = {tuple(x - s for x, s in zip(e, sa)): c for e, c in a.items()}
        div = {tuple(x - s for x, s in zip(e, sb)): c for e, c in b.items()}
        lt = max(div)
        lc = div[lt]
        quo: Dict[Exps, object] = {}
        while rem:
            e = max(rem)
            qe = tuple(x - y for x, y in zip(e, lt))
            if any(x < 0 for x in qe):
                raise InexactDivision(f"{self} is not divisible by {other}")
            qc = _qdiv(rem[e], lc)
            quo[qe] = qc
            for de, dc in div.items():
                te = tuple(x + y for x, y in zip(qe, de))
                v = rem.get(te, 0) - qc * dc
                if v == 0:
                    rem.pop(te, None)
                else:
                    rem[te] = v
        shift = [x - y for x, y in zip(sa, sb)]
        return MPoly._raw(vars, {tuple(x + s for x, s in zip(e, shift)): c for e, c in quo.items()})

    def divides(self, other: "MPoly") -> bool:
        try:
            other.exact_div(self)
        except InexactDivision:
            return False
        return True

    # -- comparison ---------------------------------------------------
    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.vars == other.vars:
            return self.terms == other.terms
        return (self - other).is_zero()

    def __hash__(self):
        if self._hash is None:
            p = self.pruned()
            if p.is_constant():
                self._hash = hash(p.constant_value())
            else:
                self._hash = hash((p.vars, frozenset(p.terms.items())))
        return self._hash

    # -- structure ----------------------------------------------------
    def degree(self, var: str) -> int:
        if var not in self.vars or not self.terms:
            return 0
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def min_degree(self, var: str) -> int:
        if var not in self.vars or not self.terms:
            return 0
        i = self.vars.index(var)
        return min(e[i] for e in self.terms)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def coeffs_in(self, var: str) -> Dict[int, "MPoly"]:
        """Split as ``sum_k c_k * var**k``; the ``c_k`` no longer mention ``var``."""
        if var not in self.vars:
            return {0: self} if self.terms else {}
        i = self.vars.index(var)
        rest = self.vars[:i] + self.vars[i + 1:]
        parts: Dict[int, Dict[Exps, object]] = {}
        for e, c in self.terms.items():
            parts.setdefault(e[i], {})[e[:i] + e[i + 1:]] = c
        return {k: MPoly._raw(rest, t) for k, t in parts.items()}

    def coeff(self, monomial: Mapping[str, int]):
        """Rational coefficient of one monomial (missing variables have exponent 0)."""
        e = tuple(monomial.get(v, 0) for v in self.vars)
        if any(v not in self.vars and k for v, k in monomial.items()):
            return 0
        return self.terms.get(e, 0)

    def leading_term(self):
        e = max(self.terms)
        return e, self.terms[e]

    def map_coeffs(self, fn) -> "MPoly":
        return MPoly(self.vars, {e: fn(c) for e, c in self.terms.items()})

    def evaluate(self, values: Mapping[str, object]):
        """Substitute every variable; values may be numbers or any ring element."""
        total = 0
        for e, c in self.terms.items():
            t = c
            for v, k in zip(self.vars, e):
                if k:
                    t = t * values[v] ** k if k > 0 else t / values[v] ** (-k)
            total = total + t
        return total

    def partial_eval(self, values: Mapping[str, object]) -> "MPoly":
        """Substitute numbers for some of the variables."""
        keep = [i for i, v in enumerate(self.vars) if v not in values]
        rest = tuple(self.vars[i] for i in keep)
        out: Dict[Exps, object] = {}
        for e, c in self.terms.items():
            t = c
            for i, v in enumerate(self.vars):
                if v in values and e[i]:
                    t = t * Fraction(values[v]) ** e[i]
            ne = tuple(e[i] for i in keep)
            out[ne] = out.get(ne, 0) + t
        return MPoly(rest, out)

    def truncate(self, var: str, order: int) -> "MPoly":
        """Drop terms whose degree in ``var`` exceeds ``order``."""
        if var not in self.vars:
            return self
        i = self.vars.index(var)
        return MPoly._raw(self.vars, {e: c for e, c in self.terms.items() if e[i] <= order})

    # -- serialization ------------------------------------------------
    def sorted_terms(self):
        p = self.pruned()
        return p.vars, sorted(p.terms.items())

    def to_json(self) -> dict:
        vars, items = self.sorted_terms()
        return {"vars": list(vars),
                "terms": [{"coeff": _fmt_coeff(c), "exps": list(e)} for e, c in items]}

    @classmethod
    def from_json(cls, obj: Mapping) -> "MPoly":
        vars = tuple(obj["vars"])
        return cls(vars, {tuple(t["exps"]): Fraction(t["coeff"]) for t in obj["terms"]})

    def __str__(self):
        vars, items = self.sorted_terms()
        if not items:
            return "0"
        out = []
        for e, c in items:
            factors = []
            for v, k in zip(vars, e):
                if k == 1:
                    factors.append(v)
                elif k:
                    factors.append(f"{v}^{k}")
            c = Fraction(c)
            sign = "-" if c < 0 else "+"
            c = abs(c)
            if not factors:
                body = _fmt_coeff(c)
            elif c == 1:
                body = "*".join(factors)
            else:
                body = _fmt_coeff(c) + "*" + "*".join(factors)
            out.append((sign, body))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self):
        return f"MPoly({str(self)!r})"


def var(name: str) -> MPoly:
    return MPoly.var(name)


def variables(names: str):
    """``x, y = variables("x y")``."""
    return tuple(MPoly.var(n) for n in names.replace(",", " ").split())


def const(c) -> MPoly:
    return MPoly.const(c)
