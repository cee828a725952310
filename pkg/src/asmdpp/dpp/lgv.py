"""LGV matrices for DPPs and the infinite matrices M_DPP, M'_DPP.

Order-n DPPs use start points (s, 0) with s = a_ii - 2 in {0, ..., n-2}, so
the LGV matrix D is (n-1) x (n-1) and Z_DPP^(n)(x, y, 1) = det(I + D).  The
generating-function matrix H has an extra leading row of zeros:
H[i+1][j+1] = D[i][j], hence det(I + H^{[0,n-1]}) = det(I + D^{[0,n-2]}).
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import List

from asmdpp import linalg
from asmdpp.exactalg import MPoly, NuElem, RatFun, series_from_ratfun, to_ratfun
from asmdpp.genfun import GFMatrix, RuleMatrix, T as Tfam

X, Y, Z = MPoly.var("x"), MPoly.var("y"), MPoly.var("z")
UV, VV = MPoly.var("u"), MPoly.var("v")


def _binom(a: int, b: int) -> int:
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


@lru_cache(maxsize=None)
def d_entry(i: int, j: int) -> MPoly:
    """sum_{k<=i} sum_{l<=min(k, j+1)} C(k,l) x^(k-l) C(j+1,l) y^(l+1)."""
    total = MPoly.const(0)
    for k in range(i + 1):
        for l in range(min(k, j + 1) + 1):
            total = total + comb(k, l) * comb(j + 1, l) * X ** (k - l) * Y ** (l + 1)
    return total


def lgv_matrix(n: int) -> List[List[MPoly]]:
    """D^{[0,n-2]}: single-path partition functions for order-n DPPs."""
    return [[d_entry(i, j) for j in range(n - 1)] for i in range(n - 1)]


def z_dpp_det(n: int) -> MPoly:
    m = len(lgv_matrix(n))
    return linalg.det(linalg.matadd(linalg.identity(m), lgv_matrix(n))) if m else MPoly.const(1)


def _third_piece(l: int, n: int) -> MPoly:
    """Paths from the diagonal point (l, l+1) to (0, n) plus the final step,
    with z on every step at height n: sum_m C(n-m-2, l-m) y^(l+1) z^(m+1)."""
    if l == n - 1:
        return (Y * Z) ** n
    total = MPoly.const(0)
    for m in range(l + 1):
        total = total + _binom(n - m - 2, l - m) * Y ** (l + 1) * Z ** (m + 1)
    return total


def d_prime_last(i: int, n: int) -> MPoly:
    """Last column (endpoint (0, n)) of the z-refined LGV matrix of order n."""
    total = MPoly.const(0)
    for k in range(i + 1):
        for l in range(min(k, n - 1) + 1):
            total = total + comb(k, l) * X ** (k - l) * _third_piece(l, n)
    return total


def d_prime_matrix(n: int) -> List[List[MPoly]]:
    m = lgv_matrix(n)
    for i in range(n - 1):
        m[i][n - 2] = d_prime_last(i, n)
    return m


def z_dpp_refined_det(n: int) -> MPoly:
    m = d_prime_matrix(n)
    return linalg.det(linalg.matadd(linalg.identity(len(m)), m)) if m else MPoly.const(1)


# ---------------------------------------------------------------------------
# generating-function side

def q_poly() -> MPoly:
    return 1 - X * UV - VV - (Y - X) * UV * VV


def h_gf() -> RatFun:
    """y u / ((1 - u)(1 - x u - v - (y - x) u v))."""
    return to_ratfun(Y * UV) / to_ratfun((1 - UV) * q_poly())


def m_dpp_gf() -> RatFun:
    return 1 / to_ratfun(1 - UV * VV) + h_gf()


def h_matrix() -> GFMatrix:
    return GFMatrix(Y * UV, (1 - UV) * q_poly())


def h_structured() -> RuleMatrix:
    """y S (I - S)^{-1} T(x, 1, y - x): row i sums rows k < i of T."""
    G = Tfam(X, 1, Y - X)

    def rule(i, j):
        total = MPoly.const(0)
        for k in range(i):
            total = total + G.entry(k, j)
        return Y * total

    return RuleMatrix(rule)


def m_dpp(n: int) -> List[List[MPoly]]:
    H = h_matrix()
    return [[(1 if i == j else 0) + H.entry(i, j) for j in range(n)] for i in range(n)]


def refined_dpp_column(n: int):
    """[u^i] of (z-1)/(1-u) (y u + nu (1 - x u)) ((1+(y-x)u)/(1-xu))^n / (1-(y(z-1)+x)u),
    split as (nu-free part, nu part) for i < n."""
    r = to_ratfun((1 + (Y - X) * UV) ** n) / to_ratfun(
        (1 - X * UV) ** n * (1 - (Y * (Z - 1) + X) * UV) * (1 - UV))
    r = r * to_ratfun(Z - 1)
    s0 = series_from_ratfun(r * to_ratfun(Y * UV), "u", n - 1)
    s1 = series_from_ratfun(r * to_ratfun(1 - X * UV), "u", n - 1)
    return [s0[i] for i in range(n)], [s1[i] for i in range(n)]


def m_dpp_refined(n: int) -> List[List[NuElem]]:
    """Truncation of M'_DPP: I + H with the last column patched."""
    base = [[NuElem(e, 0) for e in row] for row in m_dpp(n)]
    c0, c1 = refined_dpp_column(n)
    for i in range(n):
        base[i][n - 1] = base[i][n - 1] + NuElem(c0[i], c1[i])
    return base


def z_dpp_refined_nu_det(n: int) -> NuElem:
    return linalg.det(m_dpp_refined(n))


def m_dpp_refined_gf(n: int) -> NuElem:
    """Full double generating function of M'_DPP (first two terms in u, v)."""
    extra_common = to_ratfun((Z - 1) * (1 - VV) * VV ** (n - 1) * (1 + (Y - X) * UV) ** n) / to_ratfun(
        (1 - UV) * (1 - (Y * (Z - 1) + X) * UV) * (1 - X * UV) ** n)
    return NuElem(m_dpp_gf() + extra_common * to_ratfun(Y * UV), extra_common * to_ratfun(1 - X * UV))
