"""The lambda-determinant: deformed T-system recursion and ASM expansion."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Sequence, Tuple

from asmdpp.asm.core import asm_stats, enumerate_asm
from asmdpp.errors import InexactDivision, TSystemZeroDivision
from asmdpp.exactalg import MPoly, RatFun, simplify, to_ratfun
from asmdpp.exactalg.mpoly import _is_number


def _div(a, b):
    if _is_number(a) and _is_number(b):
        return Fraction(a) / b if not (isinstance(a, int) and isinstance(b, int) and a % b == 0) else a // b
    if isinstance(b, MPoly) and b.is_constant():
        return a / b.constant_value()
    if _is_number(b):
        return a / b
    try:
        return a / b
    except InexactDivision:
        return simplify(to_ratfun(a) / to_ratfun(b))


def _power(a, e: int):
    if e >= 0:
        return a ** e
    if _is_number(a):
        return Fraction(1) / Fraction(a) ** (-e)
    if isinstance(a, MPoly) and a.is_monomial():
        return a ** e
    return simplify(to_ratfun(a) ** e)


def lambda_det_tsystem(a: Sequence[Sequence], lam):
    """T_{0,0,n} of the deformed T-system with the matrix entries as initial data.

    Values live on the diamond |i|+|j| <= n-k with i+j+k = n (mod 2); only
    two consecutive k-slices are kept.
    """
    n = len(a)
    if n == 0:
        return 1

    def sites(k):
        r = n - k
        return [(i, j) for i in range(-r, r + 1) for j in range(-r, r + 1)
                if abs(i) + abs(j) <= r and (i + j + k - n) % 2 == 0]

    prev: Dict[Tuple[int, int], object] = {s: 1 for s in sites(0)}
    prev.update({(i, j): 1 for i in range(-n - 1, n + 2) for j in range(-n - 1, n + 2)
                 if (i + j - n) % 2 == 0})
    cur: Dict[Tuple[int, int], object] = {}
    for i, j in sites(1):
        cur[(i, j)] = a[(j - i + n + 1) // 2 - 1][(i + j + n + 1) // 2 - 1]
    for k in range(1, n):
        nxt = {}
        for i, j in sites(k + 1):
            den = prev[(i, j)]
            if den == 0:
                raise TSystemZeroDivision((i, j, k - 1))
            num = cur[(i, j + 1)] * cur[(i, j - 1)] + lam * cur[(i + 1, j)] * cur[(i - 1, j)]
            nxt[(i, j)] = _div(num, den)
        prev, cur = cur, nxt
    return cur[(0, 0)]


def lambda_det_expansion(a: Sequence[Sequence], lam):
    """sum over ASMs B of lam^(Inv-N) (1+lam)^N prod a_ij^(b_ij)."""
    n = len(a)
    if n == 0:
        return 1
    total = 0
    for B in enumerate_asm(n):
        st = asm_stats(B)
        term = lam ** (st.inv - st.nminus) * (1 + lam) ** st.nminus
        for i, row in enumerate(B.entries):
            for j, b in enumerate(row):
                if b:
                    term = term * _power(a[i][j], b)
        total = total + term
    return simplify(total) if isinstance(total, RatFun) else total
