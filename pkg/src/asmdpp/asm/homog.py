"""Homogeneous limit of the IK determinant and the infinite matrices M_ASM, M'_ASM."""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import List

from asmdpp import linalg
from asmdpp.asm.sixv import weight_a, weight_b
from asmdpp.errors import DegenerateParameters
from asmdpp.exactalg import MPoly, NuElem, RatFun, series_from_ratfun, to_ratfun
from asmdpp.genfun import GFMatrix, L, RuleMatrix, U, T as Tfam

X, Y, Z = MPoly.var("x"), MPoly.var("y"), MPoly.var("z")
UV, VV = MPoly.var("u"), MPoly.var("v")
NU = NuElem(0, 1)


# ---------------------------------------------------------------------------
# homogeneous six-vertex value

def homogeneous_weights(q, r):
    """(a, b, c) at z = r, w = 1/r; c = q^2 - q^-2 since sqrt(z w) = 1."""
    q, r = Fraction(q), Fraction(r)
    return weight_a(q, r, 1 / r), weight_b(q, r, 1 / r), q * q - 1 / (q * q)


def homogeneous_6v(q, r, n: int):
    """Normalized DWBC partition function with every z_i = r and w_j = 1/r.

    The ratio det(f(z_i, w_j)) / (Delta(z) Delta'(w)) tends to
    (-1)^(n(n-1)/2) det of the Taylor coefficients of f at (r, 1/r), which
    are read off the generating function f(r + u, 1/r + v).
    """
    q, r = Fraction(q), Fraction(r)
    a, b, _ = homogeneous_weights(q, r)
    if a == 0 or b == 0:
        raise DegenerateParameters("a or b vanishes at the homogeneous point")
    zz, ww = r + UV, 1 / r + VV
    ab = (q * zz - ww / q) * (zz / q - q * ww)
    taylor = GFMatrix(MPoly.const(1), ab).truncate(n)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * (a * b) ** (n * n) * linalg.det(taylor)


def homogeneous_6v_bruteforce(q, r, n: int):
    """sum over ASMs of a^{N_a} b^{N_b} c^{N_c - n} (vertex counts via the bijection)."""
    from asmdpp.asm.core import enumerate_asm
    from asmdpp.asm.sixv import asm_to_6v

    a, b, c = homogeneous_weights(q, r)
    total = Fraction(0)
    for B in enumerate_asm(n):
        k = asm_to_6v(B).counts()
        total += a ** k["a"] * b ** k["b"] * c ** (k["c"] - n)
    return total


def bridge_xy(q, r):
    """x = (c/b)^2, y = (a/b)^2 at the homogeneous point."""
    a, b, c = homogeneous_weights(q, r)
    return (c / b) ** 2, (a / b) ** 2


def zasm_bridge_check(q, r, n: int, z_asm=None) -> bool:
    """b^{-n(n-1)} times the homogeneous value equals Z_ASM(x, y, 1) at the bridge point."""
    from asmdpp.asm.core import z_asm_bruteforce

    a, b, _ = homogeneous_weights(q, r)
    x, y = bridge_xy(q, r)
    zpoly = z_asm if z_asm is not None else z_asm_bruteforce(n, w=False)
    target = zpoly.evaluate({"x": x, "y": y, "z": 1, "w": 1})
    return homogeneous_6v(q, r, n) / b ** (n * (n - 1)) == target


# ---------------------------------------------------------------------------
# A_+- factorization

def apm_parameters(q, r, sign: int = 1):
    """(alpha, beta, alpha', beta') of the A_+ factorization; sign=-1 uses q -> 1/q."""
    q = to_ratfun(q) if not isinstance(q, (int, Fraction)) else Fraction(q)
    r = to_ratfun(r) if not isinstance(r, (int, Fraction)) else Fraction(r)
    if sign < 0:
        q = 1 / q
    try:
        alpha = (1 - q * q * r * r) / r
        beta = (q * q - 1 / (q * q)) / (r * r - q * q)
        alpha2 = -q * q * r * r * beta
        beta2 = -1 / alpha
    except ZeroDivisionError as exc:
        raise DegenerateParameters("A_+- parameters are singular here") from exc
    return alpha, beta, alpha2, beta2


def apm_matrix(q, r, sign: int = 1) -> GFMatrix:
    """Taylor matrix with GF 1/((1/r + u)(1/r + v) - q^{+-2})."""
    q, r = Fraction(q), Fraction(r)
    qq = q * q if sign > 0 else 1 / (q * q)
    return GFMatrix(MPoly.const(1), (1 / r + UV) * (1 / r + VV) - qq)


def apm_factorization_check(q, r, n: int, sign: int = 1) -> bool:
    """A^{[0,n-1]} = (r^-2 - q^{+-2})^{-1} L(-1/beta, -1/alpha)^{[0,n-1]} U(alpha', beta')^{[0,n-1]}.

    L(-1/beta, -1/alpha) is the transpose of U(alpha, beta)^{-1}; both outer
    factors are triangular so the truncated product is exact.
    """
    q, r = Fraction(q), Fraction(r)
    alpha, beta, alpha2, beta2 = apm_parameters(q, r, sign)
    if alpha == 0 or beta == 0:
        raise DegenerateParameters("alpha or beta vanishes")
    qq = q * q if sign > 0 else 1 / (q * q)
    pre = 1 / (1 / (r * r) - qq)
    lower = L(-1 / beta, -1 / alpha).matrix().truncate(n)
    upper = U(alpha2, beta2).matrix().truncate(n)
    rhs = linalg.scale(pre, linalg.matmul(lower, upper))
    return linalg.equal(apm_matrix(q, r, sign).truncate(n), rhs)


# ---------------------------------------------------------------------------
# M_ASM and its refinement

def g_gf() -> RatFun:
    return 1 / to_ratfun(1 - X * UV - VV - (Y - X) * UV * VV)


def g_matrix() -> GFMatrix:
    """G, generated by 1/(1 - x u - v - (y - x) u v)."""
    return GFMatrix(MPoly.const(1), 1 - X * UV - VV - (Y - X) * UV * VV)


def g_structured():
    """G as the structured family member T(x, 1, y - x)."""
    return Tfam(X, 1, Y - X)


def m_asm_gf() -> NuElem:
    """(1 - nu)/(1 - u v) + nu/(1 - x u - v - (y - x) u v), as a NuElem of RatFuns."""
    return NuElem(1 / to_ratfun(1 - UV * VV), g_gf() - 1 / to_ratfun(1 - UV * VV))


def m_asm_matrix() -> RuleMatrix:
    G = g_structured()
    return RuleMatrix(lambda i, j: NuElem((1 if i == j else 0), G.entry(i, j) - (1 if i == j else 0)))


def m_asm(n: int) -> List[List[NuElem]]:
    return m_asm_matrix().truncate(n)


def z_asm_det(n: int) -> NuElem:
    return linalg.det(m_asm(n))


def refined_column_series(n: int) -> List[MPoly]:
    """Coefficients of u^0..u^{n-1} in ((1+(y-x)u)/(1-xu))^n / (1-(y(z-1)+x)u)."""
    f = to_ratfun((1 + (Y - X) * UV) ** n) / to_ratfun((1 - X * UV) ** n * (1 - (Y * (Z - 1) + X) * UV))
    s = series_from_ratfun(f, "u", n - 1)
    return [s[i] for i in range(n)]


def m_asm_refined(n: int) -> List[List[NuElem]]:
    """Truncation of M'_ASM: the last column gets nu (z-1) [u^i v^{n-1}] of the extra term."""
    base = m_asm(n)
    extra = refined_column_series(n)
    for i in range(n):
        base[i][n - 1] = base[i][n - 1] + NuElem(0, (Z - 1) * extra[i])
    return base


def m_asm_refined_gf(n: int) -> NuElem:
    """Full double generating function of M'_ASM as a NuElem over RatFun."""
    one = to_ratfun(1)
    nu = NuElem(0, one)
    third = nu * to_ratfun(Z - 1) / to_ratfun(1 - (Y * (Z - 1) + X) * UV)
    third = third * (to_ratfun(1 + (Y - X) * UV) / to_ratfun(1 - X * UV)) ** n * to_ratfun(VV ** (n - 1))
    # 1 + (v/x) (y(nu-1) + nu(xu-1)) / (nu + (y - nu x) u)
    inner_num = NuElem(-Y, Y + X * UV - 1)
    inner_den = NuElem(Y * UV, 1 - X * UV)
    tail = NuElem(one, 0) + NuElem(to_ratfun(VV) / to_ratfun(X), 0) * inner_num / inner_den
    return m_asm_gf() + third * tail


def z_asm_refined_det(n: int) -> NuElem:
    return linalg.det(m_asm_refined(n))
