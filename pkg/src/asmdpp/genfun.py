"""Infinite matrices given by bivariate generating functions or entry rules.

An infinite matrix ``A`` with entries ``a[i][j]`` (i, j >= 0) is encoded by
``f_A(u, v) = sum a[i][j] u^i v^j``.  Products of infinite matrices are
realized either through the closed forms of the structured families
(:func:`structured_product`, :func:`structured_inverse`) or order by order in
a grading variable (:func:`graded_product`).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial
from typing import Callable, Dict, Mapping, Tuple

from asmdpp.errors import DegenerateParameters, GradingViolation, NotExpandable
from asmdpp.exactalg import GradedSeries, MPoly, RatFun, simplify, to_ratfun
from asmdpp.exactalg.mpoly import _is_number
from asmdpp.exactalg.series import _divide

U_VAR, V_VAR = "u", "v"


class InfMatrix:
    """Base class: subclasses implement :meth:`entry`."""

    def entry(self, i: int, j: int):
        raise NotImplementedError

    def __getitem__(self, ij: Tuple[int, int]):
        i, j = ij
        if i < 0 or j < 0:
            raise IndexError("infinite matrices are indexed from 0")
        return self.entry(i, j)

    def truncate(self, n: int, m: int | None = None):
        """Leading n x m block (n x n by default) as a list of rows."""
        if n < 1:
            raise ValueError("truncation size must be at least 1")
        m = n if m is None else m
        return [[self.entry(i, j) for j in range(m)] for i in range(n)]

    @property
    def T(self) -> "InfMatrix":
        return RuleMatrix(lambda i, j: self.entry(j, i))

    def __add__(self, other: "InfMatrix") -> "InfMatrix":
        return RuleMatrix(lambda i, j: self.entry(i, j) + other.entry(i, j))

    def __sub__(self, other: "InfMatrix") -> "InfMatrix":
        return RuleMatrix(lambda i, j: self.entry(i, j) - other.entry(i, j))

    def scaled(self, c) -> "InfMatrix":
        return RuleMatrix(lambda i, j: c * self.entry(i, j))

    def patched(self, columns: Mapping[int, Callable[[int], object]]) -> "ColumnPatched":
        return ColumnPatched(self, columns)


class RuleMatrix(InfMatrix):
    def __init__(self, rule: Callable[[int, int], object]):
        self.rule = rule

    def entry(self, i, j):
        return self.rule(i, j)


class ColumnPatched(InfMatrix):
    """A base matrix with finitely many columns replaced by explicit rules."""

    def __init__(self, base: InfMatrix, columns: Mapping[int, Callable[[int], object]]):
        self.base = base
        self.columns = dict(columns)

    def entry(self, i, j):
        rule = self.columns.get(j)
        if rule is not None:
            return rule(i)
        return self.base.entry(i, j)


def _split_uv(p: MPoly, u: str, v: str) -> Dict[Tuple[int, int], MPoly]:
    out: Dict[Tuple[int, int], MPoly] = {}
    for a, pa in p.coeffs_in(u).items():
        for b, pab in pa.coeffs_in(v).items():
            if a < 0 or b < 0:
                raise NotExpandable("negative powers of the generating-function variables")
            out[(a, b)] = pab
    return out


class GFMatrix(InfMatrix):
    """Entries are Taylor coefficients of a rational function of (u, v).

    Coefficients are produced by bivariate series division and memoized; the
    memo only ever grows with values that are fully determined, so sharing an
    instance between callers is harmless.
    """

    def __init__(self, num, den=1, u: str = U_VAR, v: str = V_VAR):
        if isinstance(num, RatFun) and den == 1:
            num, den = num.num, num.den
        num = MPoly.const(num) if _is_number(num) else num
        den = MPoly.const(den) if _is_number(den) else den
        if isinstance(num, RatFun) or isinstance(den, RatFun):
            f = to_ratfun(num) / to_ratfun(den)
            num, den = f.num, f.den
        self.u, self.v = u, v
        self.num = _split_uv(num, u, v)
        self.den = _split_uv(den, u, v)
        d00 = self.den.get((0, 0))
        if d00 is None or d00.is_zero():
            raise NotExpandable("generating function has no constant term in its denominator")
        self.d00 = d00.constant_value() if d00.is_constant() else d00
        self._den_terms = [(ab, c) for ab, c in self.den.items() if ab != (0, 0)]
        self._memo: Dict[Tuple[int, int], object] = {}

    @classmethod
    def from_ratfun(cls, f, u: str = U_VAR, v: str = V_VAR) -> "GFMatrix":
        f = to_ratfun(f)
        return cls(f.num, f.den, u, v)

    def gf(self) -> RatFun:
        U, V = MPoly.var(self.u), MPoly.var(self.v)
        num = sum((c * U ** a * V ** b for (a, b), c in self.num.items()), MPoly.const(0))
        den = sum((c * U ** a * V ** b for (a, b), c in self.den.items()), MPoly.const(0))
        return RatFun(num, den)

    def entry(self, i, j):
        memo = self._memo
        if (i, j) in memo:
            return memo[(i, j)]
        for a in range(i + 1):
            for b in range(j + 1):
                if (a, b) in memo:
                    continue
                s = self.num.get((a, b), MPoly.const(0))
                for (da, db), c in self._den_terms:
                    if da <= a and db <= b:
                        s = s - c * memo[(a - da, b - db)]
                memo[(a, b)] = _divide(s, self.d00) if self.d00 != 1 else s
        return memo[(i, j)]


def coeff(m: InfMatrix, i: int, j: int):
    if i < 0 or j < 0:
        raise IndexError("indices must be non-negative")
    return m.entry(i, j)


def truncate(m: InfMatrix, n: int):
    return m.truncate(n)


# ---------------------------------------------------------------------------
# structured families

def _rf(x):
    return simplify(to_ratfun(x)) if not _is_number(x) else x


def _nonzero(x, what: str):
    if x == 0:
        raise DegenerateParameters(f"{what} vanishes identically")
    return x


@dataclass(frozen=True)
class StructParams:
    """One of the families L(a,b), U(a,b), T(a,b,c), S, I times a prefactor."""

    family: str
    alpha: object = 0
    beta: object = 0
    gamma: object = 0
    prefactor: object = 1

    def __post_init__(self):
        if self.family not in {"L", "U", "T", "S", "I"}:
            raise ValueError(f"unknown family {self.family!r}")

    def gf(self) -> RatFun:
        u, v = MPoly.var(U_VAR), MPoly.var(V_VAR)
        a, b, c = (to_ratfun(p) for p in (self.alpha, self.beta, self.gamma))
        if self.family == "L":
            f = 1 / (1 - b * u * (1 + a * v))
        elif self.family == "U":
            f = 1 / (1 - b * v * (1 + a * u))
        elif self.family == "T":
            f = 1 / (1 - a * u - b * v - c * u * v)
        elif self.family == "S":
            f = to_ratfun(u) / (1 - u * v)
        else:
            f = 1 / to_ratfun(1 - u * v)
        return to_ratfun(self.prefactor) * f

    def entry(self, i: int, j: int):
        """Closed-form entry; agrees with the Taylor coefficients of :meth:`gf`."""
        a, b, c = self.alpha, self.beta, self.gamma
        if self.family == "L":
            val = comb(i, j) * b ** i * a ** j if j <= i else 0
        elif self.family == "U":
            val = comb(j, i) * b ** j * a ** i if i <= j else 0
        elif self.family == "S":
            val = 1 if i == j + 1 else 0
        elif self.family == "I":
            val = 1 if i == j else 0
        else:
            val = 0
            for k in range(min(i, j) + 1):
                mult = factorial(i + j - k) // (factorial(i - k) * factorial(j - k) * factorial(k))
                val = val + mult * a ** (i - k) * b ** (j - k) * c ** k
        return val * self.prefactor if self.prefactor != 1 else val

    def matrix(self) -> InfMatrix:
        return RuleMatrix(self.entry)

    def gf_matrix(self) -> GFMatrix:
        return GFMatrix.from_ratfun(self.gf())

    def as_T(self) -> "StructParams":
        """Rewrite L, U, I in the T family: L(a,b)=T(b,0,ab), U(a,b)=T(0,b,ab), I=T(0,0,1)."""
        a, b = self.alpha, self.beta
        if self.family == "T":
            return self
        if self.family == "L":
            return StructParams("T", b, 0, _rf(a * b), self.prefactor)
        if self.family == "U":
            return StructParams("T", 0, b, _rf(a * b), self.prefactor)
        if self.family == "I":
            return StructParams("T", 0, 0, 1, self.prefactor)
        raise DegenerateParameters("the shift matrix is not in the T family")

    def same_matrix(self, other: "StructParams", size: int = 8) -> bool:
        return all((self.entry(i, j) - other.entry(i, j)) == 0 for i in range(size) for j in range(size))


def L(alpha, beta) -> StructParams:
    return StructParams("L", alpha, beta)


def U(alpha, beta) -> StructParams:
    return StructParams("U", alpha, beta)


def T(alpha, beta, gamma) -> StructParams:
    return StructParams("T", alpha, beta, gamma)


S = StructParams("S")
I = StructParams("I")


def structured_product(p: StructParams, q: StructParams) -> StructParams:
    """Closed form of the product of two structured infinite matrices."""
    pre = _rf(to_ratfun(p.prefactor) * to_ratfun(q.prefactor))
    if p.family == "I":
        return StructParams(q.family, q.alpha, q.beta, q.gamma, pre)
    if q.family == "I":
        return StructParams(p.family, p.alpha, p.beta, p.gamma, pre)
    a, b = to_ratfun(p.alpha), to_ratfun(p.beta)
    a2, b2 = to_ratfun(q.alpha), to_ratfun(q.beta)
    if p.family == "L" and q.family == "L":
        d = _nonzero(1 + a * b2, "1 + alpha*beta'")
        return StructParams("L", _rf(a * b2 * a2 / d), _rf(b * d), 0, pre)
    if p.family == "U" and q.family == "U":
        # transpose of L(a', b') L(a, b); the second parameter carries beta'
        d = _nonzero(1 + a2 * b, "1 + alpha'*beta")
        return StructParams("U", _rf(a * b * a2 / d), _rf(b2 * d), 0, pre)
    if p.family == "L" and q.family == "U":
        return StructParams("T", _rf(b), _rf(b2), _rf(b * b2 * (a * a2 - 1)), pre)
    if p.family == "U" and q.family == "L":
        # U(a', b') L(a, b): here p plays (a', b') and q plays (a, b)
        ap, bp, aq, bq = a, b, a2, b2
        d = _nonzero(1 - bq * bp, "1 - beta*beta'")
        return StructParams("T", _rf(ap * bq * bp / d), _rf(aq * bq * bp / d),
                            _rf(aq * ap * bq * bp / d), _rf(to_ratfun(pre) / d))
    if "S" in (p.family, q.family):
        raise DegenerateParameters("no closed form for products with the shift matrix")
    p, q = p.as_T(), q.as_T()
    a, b, c = (to_ratfun(x) for x in (p.alpha, p.beta, p.gamma))
    a2, b2, c2 = (to_ratfun(x) for x in (q.alpha, q.beta, q.gamma))
    d = _nonzero(1 - b * a2, "1 - beta*alpha'")
    return StructParams("T", _rf((a + c * a2) / d), _rf((b2 + c2 * b) / d),
                        _rf((c * c2 - a * b2) / d), _rf(to_ratfun(pre) / d))


def structured_inverse(p: StructParams) -> StructParams:
    pre = p.prefactor
    if _nonzero(pre, "prefactor") != 1:
        pre = _rf(1 / to_ratfun(pre))
    if p.family == "I":
        return StructParams("I", prefactor=pre)
    a, b = to_ratfun(p.alpha), to_ratfun(p.beta)
    if p.family in ("L", "U"):
        _nonzero(a, "alpha")
        _nonzero(b, "beta")
        return StructParams(p.family, _rf(-1 / b), _rf(-1 / a), 0, pre)
    if p.family == "T":
        c = to_ratfun(p.gamma)
        _nonzero(c, "gamma")
        d = _nonzero(a * b + c, "alpha*beta + gamma")
        return StructParams("T", _rf(-a / c), _rf(-b / c), _rf(1 / c), _rf(to_ratfun(pre) * d / c))
    raise DegenerateParameters("the shift matrix is not invertible")


# ---------------------------------------------------------------------------
# graded products

@dataclass(frozen=True)
class Grading:
    """Declared lower bound on the valuation of entry (i, j) in ``var``.

    ``mode="sum"`` declares ``slope*(i+j)`` (the epsilon convention);
    ``mode="diff"`` declares ``slope*|i-j|`` (e.g. T_{s,t}(alpha) in alpha).
    """

    var: str
    slope: int = 1
    mode: str = "sum"

    def bound(self, i: int, j: int) -> int:
        if self.mode == "sum":
            return self.slope * (i + j)
        if self.mode == "diff":
            return self.slope * abs(i - j)
        raise GradingViolation(f"unknown grading mode {self.mode!r}")


def as_series(x, gvar: str, order: int) -> GradedSeries:
    if isinstance(x, GradedSeries):
        return x.truncated(order)
    if _is_number(x):
        return GradedSeries(gvar, order, [x])
    if isinstance(x, RatFun) and not x.is_polynomial():
        from asmdpp.exactalg import series_from_ratfun
        return series_from_ratfun(x, gvar, order)
    return GradedSeries.from_poly(x, gvar, order)


def graded_product(a: InfMatrix, b: InfMatrix, grading: Grading, order: int) -> RuleMatrix:
    """Entries of ``a @ b`` as series in ``grading.var``, exact to ``order``.

    The inner sum stops once the declared valuation bound of a term exceeds
    ``order``; an entry violating its declared bound raises GradingViolation.
    """
    if grading.slope <= 0:
        raise GradingViolation("a positive valuation slope is required to cut the inner sum")
    g = grading.var

    def checked(m, i, j):
        s = as_series(m.entry(i, j), g, order)
        val = s.valuation()
        if val is not None and val < grading.bound(i, j):
            raise GradingViolation(f"entry ({i},{j}) has {g}-valuation {val} < declared {grading.bound(i, j)}")
        return s

    def rule(i, j):
        total = GradedSeries(g, order, [])
        k = 0
        while True:
            lo = grading.bound(i, k) + grading.bound(k, j)
            if lo > order:
                if k >= max(i, j):
                    break
            else:
                total = total + checked(a, i, k) * checked(b, k, j)
            k += 1
        return total

    return RuleMatrix(rule)


def epsilon_graded(m: InfMatrix, eps: str = "eps") -> RuleMatrix:
    """The matrix (eps^(i+j) a_ij) making products formal series in eps."""
    e = MPoly.var(eps)
    return RuleMatrix(lambda i, j: e ** (i + j) * m.entry(i, j))


# ---------------------------------------------------------------------------
# closed forms against products

def _same(m, p: StructParams, size: int) -> bool:
    return all(to_ratfun(m[i][j]) == to_ratfun(p.entry(i, j)) for i in range(size) for j in range(size))


def _graded_same(m: RuleMatrix, p: StructParams, gvar: str, order: int, size: int) -> bool:
    return all(m.entry(i, j) == as_series(p.entry(i, j), gvar, order)
               for i in range(size) for j in range(size))


def property_checks(size: int = 8, order: int | None = None) -> dict:
    """Every structured product/inverse formula against the actual product.

    Triangular products are exact on truncations.  U L and T T need the
    eps-grading (beta's scaled by eps^2, resp. alpha, beta by eps and gamma by
    eps^2); the T inverse uses alpha, beta scaled by eps with the |i-j| grading.
    Parameters are symbolic.
    """
    from asmdpp import linalg

    a, b, c, a2, b2, c2 = (MPoly.var(s) for s in ("alpha", "beta", "gamma", "alpha2", "beta2", "gamma2"))
    e = MPoly.var("eps")
    order = 2 * size if order is None else order
    n = size
    out = {}

    def tprod(p, q):
        return linalg.matmul(p.matrix().truncate(n), q.matrix().truncate(n))

    out["propone"] = _same(tprod(L(a, b), L(a2, b2)), structured_product(L(a, b), L(a2, b2)), n)
    out["proptwo"] = _same(tprod(U(a, b), U(a2, b2)), structured_product(U(a, b), U(a2, b2)), n)
    eye = linalg.identity(n)
    out["propthree"] = (linalg.equal(tprod(L(a, b), structured_inverse(L(a, b))), eye)
                        and linalg.equal(tprod(U(a, b), structured_inverse(U(a, b))), eye))
    out["propfour"] = _same(tprod(L(a, b), U(a2, b2)), structured_product(L(a, b), U(a2, b2)), n)

    sum_g = Grading("eps", 1, "sum")
    pu, pl = U(a2, e * e * b2), L(a, e * e * b)
    out["propfive"] = _graded_same(graded_product(pu.matrix(), pl.matrix(), sum_g, order),
                                   structured_product(pu, pl), "eps", order, n)
    t1, t2 = T(e * a, e * b, e * e * c), T(e * a2, e * b2, e * e * c2)
    out["propsix"] = _graded_same(graded_product(t1.matrix(), t2.matrix(), sum_g, order),
                                  structured_product(t1, t2), "eps", order, n)
    t3 = T(e * a, e * b, c)
    prod = graded_product(t3.matrix(), structured_inverse(t3).matrix(), Grading("eps", 1, "diff"), order)
    out["propseven"] = _graded_same(prod, I, "eps", order, n)
    return out
