"""Alternating sign matrices: validation, enumeration and statistics."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

from asmdpp.errors import InvalidASM
from asmdpp.exactalg import MPoly

WEIGHT_VARS = ("w", "x", "y", "z")


@dataclass(frozen=True)
class ASM:
    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.entries)
        object.__setattr__(self, "entries", rows)
        if not is_asm(rows):
            raise InvalidASM(f"not an alternating sign matrix: {rows}")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def to_list(self) -> List[List[int]]:
        return [list(r) for r in self.entries]


def is_asm(rows: Sequence[Sequence[int]]) -> bool:
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        return False
    for line in list(rows) + [list(c) for c in zip(*rows)]:
        s = 0
        for v in line:
            if v not in (-1, 0, 1):
                return False
            s += v
            if s < 0 or s > 1:
                return False
        if s != 1:
            return False
    return True


def enumerate_asm(n: int) -> Iterator[ASM]:
    """Each n x n ASM once, built row by row from column prefix sums."""
    if n < 1:
        raise ValueError("n must be at least 1")
    rows: List[Tuple[int, ...]] = []
    colsum = [0] * n

    def fill_row(j: int, partial: List[int], s: int):
        if j == n:
            if s == 1:
                yield tuple(partial)
            return
        for b in (0, 1, -1):
            if 0 <= s + b <= 1 and 0 <= colsum[j] + b <= 1:
                partial.append(b)
                yield from fill_row(j + 1, partial, s + b)
                partial.pop()

    def rec(i: int):
        if i == n:
            if all(c == 1 for c in colsum):
                yield ASM(tuple(rows))
            return
        for row in list(fill_row(0, [], 0)):
            for j, b in enumerate(row):
                colsum[j] += b
            rows.append(row)
            yield from rec(i + 1)
            rows.pop()
            for j, b in enumerate(row):
                colsum[j] -= b

    yield from rec(0)


@dataclass(frozen=True)
class AsmStats:
    inv: int
    nminus: int
    t: int
    b: int

    def exponents(self) -> dict:
        return {"x": self.nminus, "y": self.inv - self.nminus, "z": self.t, "w": self.b}


def inversions(rows: Sequence[Sequence[int]]) -> int:
    """sum over i<j, k<l of b[i][l] * b[j][k]."""
    n = len(rows)
    total = 0
    acc = [0] * (n + 1)  # acc[l] = sum_{rows below} sum_{k < l} b[row][k]
    for i in range(n - 1, -1, -1):
        row = rows[i]
        total += sum(row[l] * acc[l] for l in range(n) if row[l])
        run = 0
        for l in range(n):
            acc[l] += run
            run += row[l]
        acc[n] += run
    return total


def asm_stats(B: ASM) -> AsmStats:
    rows = B.entries
    n = len(rows)
    nminus = sum(1 for r in rows for v in r if v == -1)
    return AsmStats(inversions(rows), nminus, rows[0].index(1), n - 1 - rows[-1].index(1))


def asm_weight(B: ASM) -> MPoly:
    return MPoly.monomial(asm_stats(B).exponents())


def _poly_from_counts(counts) -> MPoly:
    return MPoly(WEIGHT_VARS, counts)


def z_asm_bruteforce(n: int, *, w: bool = True) -> MPoly:
    """sum over n x n ASMs of x^N y^(Inv-N) z^t w^b (w omitted when w=False)."""
    counts = {}
    for B in enumerate_asm(n):
        st = asm_stats(B)
        key = (st.b if w else 0, st.nminus, st.inv - st.nminus, st.t)
        counts[key] = counts.get(key, 0) + 1
    return _poly_from_counts(counts).pruned()


def count_asm(n: int) -> int:
    return sum(1 for _ in enumerate_asm(n))
