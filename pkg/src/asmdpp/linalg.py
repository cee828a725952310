"""Exact dense linear algebra over commutative rings.

Matrices are plain lists of rows.  Entries may be ints, Fractions, MPoly,
RatFun or NuElem values; anything supporting ``+ - *`` works for the
division-free paths.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, List, Sequence

from asmdpp.errors import IndexOutOfRange, SizeTooSmall
from asmdpp.exactalg import MPoly, NuElem

Matrix = List[List[object]]


def identity(n: int, one=1, zero=0) -> Matrix:
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def from_rule(n: int, rule: Callable[[int, int], object], m: int | None = None) -> Matrix:
    return [[rule(i, j) for j in range(n if m is None else m)] for i in range(n)]


def transpose(a: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*a)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    bt = transpose(b)
    out = []
    for row in a:
        out_row = []
        for col in bt:
            s = 0
            for x, y in zip(row, col):
                if x != 0 and y != 0:
                    s = s + x * y
            out_row.append(s)
        out.append(out_row)
    return out


def matadd(a, b) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scale(c, a) -> Matrix:
    return [[c * x for x in row] for row in a]


def equal(a, b) -> bool:
    if len(a) != len(b):
        return False
    return all(len(ra) == len(rb) and all((x - y) == 0 for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def minor(m: Sequence[Sequence], del_rows=(), del_cols=()) -> Matrix:
    """Submatrix with the given (0-based) rows and columns removed."""
    del_rows, del_cols = set(del_rows), set(del_cols)
    if len(del_rows) != len(del_cols):
        raise ValueError("must delete as many rows as columns")
    n = len(m)
    if any(not 0 <= k < n for k in del_rows | del_cols):
        raise IndexOutOfRange(f"deleted index outside 0..{n - 1}")
    return [[x for j, x in enumerate(row) if j not in del_cols] for i, row in enumerate(m) if i not in del_rows]


def _exact_div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        assert r == 0
        return q
    if isinstance(a, int) and isinstance(b, Fraction):
        return Fraction(a) / b
    return a / b


def _is_zero(x) -> bool:
    return x == 0


def det_bareiss(m: Sequence[Sequence]):
    """Fraction-free Gaussian elimination; every division is exact."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if _is_zero(a[k][k]):
            for r in range(k + 1, n):
                if not _is_zero(a[r][k]):
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                v = piv * a[i][j] - aik * a[k][j]
                if prev != 1:
                    v = _exact_div(v, prev)
                a[i][j] = v
            a[i][k] = 0
        prev = piv
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def det_expansion(m: Sequence[Sequence]):
    """Division-free Laplace expansion with memoized column subsets, O(n 2^n)."""
    n = len(m)
    if n == 0:
        return 1
    # minors[mask] = det of rows 0..|mask|-1 against the columns in mask
    minors = {0: 1}
    for i in range(n):
        nxt = {}
        for mask, val in minors.items():
            if _is_zero(val):
                continue
            for j in range(n):
                if mask >> j & 1:
                    continue
                e = m[i][j]
                if _is_zero(e):
                    continue
                # sign from the number of chosen columns to the right of j
                above = bin(mask >> (j + 1)).count("1")
                term = val * e
                new = mask | (1 << j)
                if above & 1:
                    nxt[new] = nxt.get(new, 0) - term
                else:
                    nxt[new] = nxt.get(new, 0) + term
        minors = nxt
    return minors.get((1 << n) - 1, 0)


def det(m: Sequence[Sequence], method: str = "auto"):
    """Exact determinant.

    ``auto`` uses the division-free expansion for NuElem entries (the ring
    can have zero divisors after specialization) and Bareiss otherwise.
    """
    if method == "auto":
        method = "expansion" if any(isinstance(x, NuElem) for row in m for x in row) else "bareiss"
    if method == "bareiss":
        return det_bareiss(m)
    if method == "expansion":
        return det_expansion(m)
    raise ValueError(f"unknown method {method!r}")


def desnanot_jacobi_check(m: Sequence[Sequence]) -> bool:
    """|M| |M_{1,n}^{1,n}| == |M_n^n| |M_1^1| - |M_1^n| |M_n^1| (rows^cols deleted)."""
    n = len(m)
    if n < 2:
        raise SizeTooSmall("Desnanot-Jacobi needs at least a 2x2 matrix")
    last = n - 1
    lhs = det(m) * det(minor(m, (0, last), (0, last)))
    rhs = det(minor(m, (last,), (last,))) * det(minor(m, (0,), (0,))) \
        - det(minor(m, (0,), (last,))) * det(minor(m, (last,), (0,)))
    return (lhs - rhs) == 0


def shift_matrix(n: int) -> Matrix:
    """Truncation of S with S[i][j] = 1 iff i = j + 1."""
    return [[1 if i == j + 1 else 0 for j in range(n)] for i in range(n)]


def sandwich_truncate(a, amat: Sequence[Sequence], b, n: int | None = None) -> Matrix:
    """(I - a S) A (I - b S^t) restricted to the leading n x n block.

    Only the first n rows and columns of ``amat`` are used: the outer factors
    are lower and upper triangular so the truncation commutes with the product.
    """
    n = len(amat) if n is None else n
    A = [list(row[:n]) for row in amat[:n]]
    left = [[1 if i == j else (-a if i == j + 1 else 0) for j in range(n)] for i in range(n)]
    right = [[1 if i == j else (-b if j == i + 1 else 0) for j in range(n)] for i in range(n)]
    return matmul(matmul(left, A), right)


def to_fraction_matrix(m) -> Matrix:
    return [[Fraction(x) for x in row] for row in m]


def as_mpoly_matrix(m) -> Matrix:
    return [[MPoly.const(x) if not isinstance(x, MPoly) else x for x in row] for row in m]
