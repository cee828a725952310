"""Six-vertex configurations with domain-wall boundaries and the IK determinant.

Edge orientations: ``h[i][j]`` is the horizontal edge to the left of vertex
(i, j) (``h[i][n]`` the external edge on the right), +1 pointing right and -1
pointing left; ``v[i][j]`` is the vertical edge above vertex (i, j)
(``v[n][j]`` the external edge at the bottom), +1 pointing up and -1 down.
Spectral parameters enter squared, z_i = zeta_i^2 and w_j = omega_j^2, so the
c weight (q^2 - q^-2) sqrt(z w) is a polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, List, Sequence, Tuple

from asmdpp import linalg
from asmdpp.asm.core import ASM
from asmdpp.errors import DegenerateSpectralParameters, InvalidASM


@dataclass(frozen=True)
class SixVConfig:
    h: Tuple[Tuple[int, ...], ...]
    v: Tuple[Tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.h)

    def vertex(self, i: int, j: int) -> str:
        """'a', 'b' or 'c' (with the reflected orientation for c)."""
        left, right = self.h[i][j], self.h[i][j + 1]
        top, bottom = self.v[i][j], self.v[i + 1][j]
        if left != right:
            return "c"
        if top != bottom:
            raise InvalidASM("ice rule violated")
        return "a" if left == top else "b"

    def counts(self) -> dict:
        out = {"a": 0, "b": 0, "c": 0}
        for i in range(self.n):
            for j in range(self.n):
                out[self.vertex(i, j)] += 1
        return out

    def is_valid(self) -> bool:
        n = self.n
        if any(self.h[i][0] != 1 or self.h[i][n] != -1 for i in range(n)):
            return False
        if any(self.v[0][j] != 1 or self.v[n][j] != -1 for j in range(n)):
            return False
        for i in range(n):
            for j in range(n):
                ins = (self.h[i][j] == 1) + (self.h[i][j + 1] == -1) + (self.v[i][j] == -1) + (self.v[i + 1][j] == 1)
                if ins != 2:
                    return False
        return True

    def to_asm(self) -> ASM:
        rows = []
        for i in range(self.n):
            row = []
            for j in range(self.n):
                if self.h[i][j] == self.h[i][j + 1]:
                    row.append(0)
                else:
                    row.append(1 if self.h[i][j] == 1 else -1)
            rows.append(tuple(row))
        return ASM(tuple(rows))


def asm_to_6v(B: ASM) -> SixVConfig:
    if not isinstance(B, ASM):
        B = ASM(B)
    n = B.n
    rows = B.entries
    h = []
    for i in range(n):
        s, line = 0, []
        for j in range(n + 1):
            line.append(1 if s == 0 else -1)
            if j < n:
                s += rows[i][j]
        h.append(tuple(line))
    v = []
    col = [0] * n
    for i in range(n + 1):
        v.append(tuple(1 if c == 0 else -1 for c in col))
        if i < n:
            col = [c + b for c, b in zip(col, rows[i])]
    return SixVConfig(tuple(h), tuple(v))


def enumerate_6v(n: int) -> Iterator[SixVConfig]:
    """All ice configurations with domain-wall boundaries, found by a direct
    vertex-by-vertex search (independent of the ASM bijection)."""
    h = [[0] * (n + 1) for _ in range(n)]
    v = [[0] * n for _ in range(n + 1)]
    for i in range(n):
        h[i][0], h[i][n] = 1, -1
    for j in range(n):
        v[0][j], v[n][j] = 1, -1

    def rec(pos: int):
        if pos == n * n:
            yield SixVConfig(tuple(map(tuple, h)), tuple(map(tuple, v)))
            return
        i, j = divmod(pos, n)
        ins_known = (h[i][j] == 1) + (v[i][j] == -1)
        right_opts = (h[i][n],) if j == n - 1 else (1, -1)
        bottom_opts = (v[n][j],) if i == n - 1 else (1, -1)
        for r in right_opts:
            for bo in bottom_opts:
                if ins_known + (r == -1) + (bo == 1) != 2:
                    continue
                old_r, old_b = h[i][j + 1], v[i + 1][j]
                h[i][j + 1], v[i + 1][j] = r, bo
                yield from rec(pos + 1)
                h[i][j + 1], v[i + 1][j] = old_r, old_b

    yield from rec(0)


def weight_a(q, z, w):
    return q * z - w / q


def weight_b(q, z, w):
    return z / q - q * w


def weight_c(q, zeta, omega):
    return (q * q - 1 / (q * q)) * zeta * omega


def _frac(x):
    return Fraction(x) if isinstance(x, (int, Fraction)) else x


def sixv_bruteforce(q, zeta: Sequence, omega: Sequence):
    """Sum of vertex-weight products over all DWBC configurations, divided by
    prod_i c(z_i, w_i)."""
    q = _frac(q)
    n = len(zeta)
    z = [_frac(t) ** 2 for t in zeta]
    w = [_frac(t) ** 2 for t in omega]
    total = 0
    for cfg in enumerate_6v(n):
        term = 1
        for i in range(n):
            for j in range(n):
                kind = cfg.vertex(i, j)
                if kind == "a":
                    term = term * weight_a(q, z[i], w[j])
                elif kind == "b":
                    term = term * weight_b(q, z[i], w[j])
                else:
                    term = term * weight_c(q, _frac(zeta[i]), _frac(omega[j]))
        total = total + term
    norm = 1
    for i in range(n):
        norm = norm * weight_c(q, _frac(zeta[i]), _frac(omega[i]))
    if norm == 0:
        raise DegenerateSpectralParameters("the c weight normalization vanishes")
    return total / norm


def ik_determinant(q, zeta: Sequence, omega: Sequence):
    """prod a b / (Delta(z) Delta'(w)) * det(1/(a b)), with z = zeta^2, w = omega^2.

    Delta(z) = prod_{i<j} (z_i - z_j) and Delta'(w) = prod_{i<j} (w_j - w_i).
    With both products taken in the same orientation the value is off from
    the configuration sum by (-1)^(n(n-1)/2).
    """
    q = _frac(q)
    n = len(zeta)
    z = [_frac(t) ** 2 for t in zeta]
    w = [_frac(t) ** 2 for t in omega]
    if len(set(z)) < n or len(set(w)) < n:
        raise DegenerateSpectralParameters("coincident spectral parameters")
    ab = [[weight_a(q, z[i], w[j]) * weight_b(q, z[i], w[j]) for j in range(n)] for i in range(n)]
    if any(x == 0 for row in ab for x in row):
        raise DegenerateSpectralParameters("a vertex weight vanishes")
    pref = 1
    for row in ab:
        for x in row:
            pref = pref * x
    vdm = 1
    for i, j in combinations(range(n), 2):
        vdm = vdm * (z[i] - z[j]) * (w[j] - w[i])
    d = linalg.det([[1 / x for x in row] for row in ab])
    return pref * d / vdm
