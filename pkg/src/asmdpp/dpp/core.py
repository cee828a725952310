"""Descending plane partitions: validation, enumeration and statistics.

Row i (0-based) of a DPP holds parts a[i][0] >= a[i][1] >= ... occupying
columns i, i+1, ...; position p = j - i inside the row is what decides
whether a part is special (a part is special when it is <= p).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

from asmdpp.errors import InvalidObject
from asmdpp.exactalg import MPoly

WEIGHT_VARS = ("w", "x", "y", "z")


def is_dpp(rows: Sequence[Sequence[int]]) -> bool:
    prev_len = None
    for i, row in enumerate(rows):
        if not row or any(not isinstance(a, int) or a < 1 for a in row):
            return False
        if any(row[p] < row[p + 1] for p in range(len(row) - 1)):
            return False
        lam = len(row)
        # lambda_i < a_ii <= lambda_{i-1}
        if not lam < row[0] or (prev_len is not None and row[0] > prev_len):
            return False
        if i > 0:
            above = rows[i - 1]
            # row i starts one column right of row i-1: a[i][p] sits under a[i-1][p+1]
            if lam + 1 > len(above):
                return False
            if any(row[p] >= above[p + 1] for p in range(lam)):
                return False
        prev_len = lam
    return True


@dataclass(frozen=True)
class DPP:
    rows: Tuple[Tuple[int, ...], ...] = ()

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if not is_dpp(rows):
            raise InvalidObject(f"not a descending plane partition: {rows}")

    @property
    def parts(self) -> List[int]:
        return [a for r in self.rows for a in r]

    def max_part(self) -> int:
        return max(self.parts, default=0)

    def to_list(self) -> List[List[int]]:
        return [list(r) for r in self.rows]

    def __str__(self):
        return " / ".join(" ".join(map(str, r)) for r in self.rows) or "()"


def _rows_below(cap: Sequence[int], first_max: int, n: int):
    """Candidate rows whose part p must be < cap[p+1] and whose first part is
    at most first_max (the previous row's length)."""
    out = []

    def rec(row: List[int]):
        p = len(row)
        if row:
            lam = len(row)
            if lam < row[0]:
                out.append(tuple(row))
        if p + 1 >= len(cap):
            return
        hi = cap[p + 1] - 1
        if row:
            hi = min(hi, row[-1])
        else:
            hi = min(hi, first_max)
        for a in range(hi, 0, -1):
            row.append(a)
            if not (len(row) >= row[0]):
                rec(row)
            row.pop()

    rec([])
    return out


def enumerate_dpp(n: int) -> Iterator[DPP]:
    """Every DPP with all parts <= n (the empty one included), each once."""
    if n < 1:
        raise ValueError("order must be at least 1")

    def first_rows():
        out = []

        def rec(row: List[int]):
            if row and len(row) < row[0]:
                out.append(tuple(row))
            if row and len(row) + 1 >= row[0]:
                return
            hi = row[-1] if row else n
            for a in range(hi, 0, -1):
                if not row and a < 2:
                    continue
                row.append(a)
                rec(row)
                row.pop()

        rec([])
        return out

    def extend(rows: List[Tuple[int, ...]]):
        yield DPP(tuple(rows))
        last = rows[-1]
        for nxt in _rows_below(last, len(last), n):
            rows.append(nxt)
            yield from extend(rows)
            rows.pop()

    yield DPP(())
    for r0 in first_rows():
        yield from extend([r0])


@dataclass(frozen=True)
class DppStats:
    special: int
    nonspecial: int
    mcount: int
    pcount: int

    def exponents(self) -> dict:
        return {"x": self.special, "y": self.nonspecial, "z": self.mcount, "w": self.pcount}


def dpp_stats(A: DPP, n: int) -> DppStats:
    special = nonspecial = mcount = pcount = 0
    for row in A.rows:
        if len(row) == n - 1:
            pcount += 1
        for p, a in enumerate(row):
            if a <= p:
                special += 1
            else:
                nonspecial += 1
            if a == n:
                mcount += 1
            elif a == n - 1:
                pcount += 1
    return DppStats(special, nonspecial, mcount, pcount)


def dpp_weight(A: DPP, n: int) -> MPoly:
    return MPoly.monomial(dpp_stats(A, n).exponents())


def z_dpp_bruteforce(n: int, *, w: bool = True) -> MPoly:
    """sum over DPPs of order n of x^S y^NS z^M w^P."""
    counts = {}
    for A in enumerate_dpp(n):
        st = dpp_stats(A, n)
        key = (st.pcount if w else 0, st.special, st.nonspecial, st.mcount)
        counts[key] = counts.get(key, 0) + 1
    return MPoly(WEIGHT_VARS, counts).pruned()


def count_dpp(n: int) -> int:
    return sum(1 for _ in enumerate_dpp(n))
