"""Generating-function identities linking M_ASM and M_DPP, and their
truncated-matrix consequences."""

from __future__ import annotations

from typing import Tuple

from asmdpp import linalg
from asmdpp.asm.homog import m_asm, m_asm_gf, m_asm_refined, m_asm_refined_gf
from asmdpp.dpp.lgv import m_dpp, m_dpp_gf, m_dpp_refined, m_dpp_refined_gf
from asmdpp.exactalg import MPoly, NuElem, one_minus_nu_inverse, to_ratfun

X, Y = MPoly.var("x"), MPoly.var("y")
UV, VV = MPoly.var("u"), MPoly.var("v")
NU = NuElem(0, 1)


def sandwich_parameters(refined: bool = False):
    """(a_asm, b_asm, a_dpp, b_dpp) with (1 - a u)(1 - b v) f_ASM = (1 - a' u)(1 - b' v) f_DPP.

    Plain: a_asm = 1/(1 - nu) = 1 - y + x nu.  Refined: a_asm = 1 - y + x nu
    as well (the factor 1 + (y - x nu - 1) u); both DPP sides use (1, 1 - nu).
    """
    a_asm = one_minus_nu_inverse()
    return a_asm, NuElem(1, 0), NuElem(1, 0), NuElem(1, 0) - NU


def _factor(a: NuElem, var: MPoly) -> NuElem:
    """1 - a * var as a NuElem over RatFun."""
    return NuElem(to_ratfun(1) - a.a0 * to_ratfun(var), -(a.a1 * to_ratfun(var)))


def gf_identity_check(refined: bool = False, n: int = 3) -> bool:
    """The generating-function identity, reduced in the nu-ring."""
    a1, b1, a2, b2 = sandwich_parameters(refined)
    if refined:
        f_asm, f_dpp = m_asm_refined_gf(n), m_dpp_refined_gf(n)
    else:
        f_asm, f_dpp = m_asm_gf(), NuElem(m_dpp_gf(), 0)
    lhs = _factor(a1, UV) * _factor(b1, VV) * f_asm
    rhs = _factor(a2, UV) * _factor(b2, VV) * f_dpp
    return (lhs - rhs).is_zero()


def plain_gf_identity_polynomial() -> bool:
    """Denominator-free form of the plain identity, checked over MPoly.

    Multiplying by (1 - u v)(1 - u) Q with Q = 1 - x u - v - (y - x) u v,
    f_ASM becomes (1 - nu)(1 - u) Q + nu (1 - u)(1 - u v) and f_DPP becomes
    (1 - u) Q + y u (1 - u v).
    """
    q = 1 - X * UV - VV - (Y - X) * UV * VV
    nu = NU
    a1 = one_minus_nu_inverse()
    f_asm = (1 - nu) * ((1 - UV) * q) + nu * ((1 - UV) * (1 - UV * VV))
    f_dpp = NuElem((1 - UV) * q + Y * UV * (1 - UV * VV), 0)
    lhs = (1 - a1 * UV) * (1 - VV) * f_asm
    rhs = (1 - UV) * (1 - (1 - nu) * VV) * f_dpp
    return (lhs - rhs).is_zero()


def sandwiches(n: int, refined: bool = False) -> Tuple[list, list]:
    a1, b1, a2, b2 = sandwich_parameters(refined)
    A = m_asm_refined(n) if refined else m_asm(n)
    D = m_dpp_refined(n) if refined else [[NuElem(e, 0) for e in row] for row in m_dpp(n)]
    return linalg.sandwich_truncate(a1, A, b1, n), linalg.sandwich_truncate(a2, D, b2, n)


def asm_dpp_sandwich_check(n: int, refined: bool = False) -> bool:
    """Entry-wise equality of the two unitriangular sandwiches of the n x n truncations."""
    lhs, rhs = sandwiches(n, refined)
    return linalg.equal(lhs, rhs)


def quadratic_relation_check(zfun, n: int) -> bool:
    """(z-w) Z_n(z,w) Z_{n-1}(1,1) = (z-1) w Z_n(z,1) Z_{n-1}(1,w) - (w-1) z Z_{n-1}(z,1) Z_n(1,w).

    ``zfun(n)`` must return the four-variable polynomial in x, y, z, w.
    """
    z, w = MPoly.var("z"), MPoly.var("w")
    Zn, Zm = zfun(n), zfun(n - 1)

    def at(p, **vals):
        return p.partial_eval(vals)

    lhs = (z - w) * Zn * at(Zm, z=1, w=1)
    rhs = (z - 1) * w * at(Zn, w=1) * at(Zm, z=1) - (w - 1) * z * at(Zm, w=1) * at(Zn, z=1)
    return (lhs - rhs) == 0
