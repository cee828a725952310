"""Non-intersecting lattice paths for DPPs.

A DPP row with first part a becomes a path from (a-2, 0) to (0, a) with unit
steps L = (-1, 0) and U = (0, 1), followed by one final L step at height a.
The L step leaving abscissa p (p = 0 for the final step) sits at height h_p;
the row's parts are the heights h_0 >= h_1 >= ... that are >= 1, read from
left to right.  A part at position p is special exactly when h_p <= p.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, List, Sequence, Tuple

from asmdpp.dpp.core import DPP
from asmdpp.errors import InvalidObject
from asmdpp.exactalg import MPoly

X, Y, Z = MPoly.var("x"), MPoly.var("y"), MPoly.var("z")


@dataclass(frozen=True)
class Path:
    start: int          # starts at (start, 0)
    steps: str          # over {"L", "U"}, ending with the final "L"

    def vertices(self) -> List[Tuple[int, int]]:
        x, y = self.start, 0
        out = [(x, y)]
        for s in self.steps:
            if s == "L":
                x -= 1
            elif s == "U":
                y += 1
            else:
                raise InvalidObject(f"bad step {s!r}")
            out.append((x, y))
        return out

    def heights(self) -> List[int]:
        """h_p for p = 0..start (index p = abscissa the L step leaves)."""
        x, y = self.start, 0
        h = [0] * (self.start + 1)
        for s in self.steps:
            if s == "L":
                h[x] = y
                x -= 1
            else:
                y += 1
        return h

    def is_valid(self) -> bool:
        end = self.vertices()[-1]
        return (self.steps.endswith("L") and end == (-1, self.start + 2)
                and self.steps.count("L") == self.start + 1)


@dataclass(frozen=True)
class PathFamily:
    paths: Tuple[Path, ...] = ()

    def is_non_intersecting(self) -> bool:
        seen = set()
        for p in self.paths:
            vs = set(p.vertices())
            if vs & seen:
                return False
            seen |= vs
        return True

    def to_json(self) -> list:
        return [{"start": p.start, "steps": p.steps} for p in self.paths]


def path_from_heights(h: Sequence[int]) -> Path:
    """Inverse of Path.heights for a weakly decreasing h with h[0] = len(h) + 1."""
    s = len(h) - 1
    steps, y = [], 0
    for p in range(s, -1, -1):
        while y < h[p]:
            steps.append("U")
            y += 1
        steps.append("L")
    return Path(s, "".join(steps))


def row_to_path(row: Sequence[int]) -> Path:
    a = row[0]
    h = list(row) + [0] * (a - 1 - len(row))
    return path_from_heights(h)


def dpp_to_paths(A: DPP) -> PathFamily:
    if not isinstance(A, DPP):
        A = DPP(A)
    return PathFamily(tuple(row_to_path(r) for r in A.rows))


def paths_to_dpp(F: PathFamily) -> DPP:
    rows = []
    for p in F.paths:
        if not p.is_valid():
            raise InvalidObject(f"path {p} does not end at (0, start + 2) with a final step")
        rows.append(tuple(a for a in p.heights() if a >= 1))
    if not F.is_non_intersecting():
        raise InvalidObject("paths intersect")
    return DPP(tuple(rows))


def _paths_between(start: int, top: int) -> Iterator[Path]:
    """All L/U paths from (start, 0) to (0, top) followed by the final L."""
    for ups in combinations(range(start + top), top):
        ups = set(ups)
        steps = "".join("U" if k in ups else "L" for k in range(start + top))
        yield Path(start, steps + "L")


def step_weight(p: int, h: int, order: int | None = None):
    if h == 0:
        return 1
    w = X if h <= p else Y
    if order is not None and h == order:
        w = w * Z
    return w


def path_weight(path: Path, order: int | None = None):
    w = MPoly.const(1)
    for p, h in enumerate(path.heights()):
        w = w * step_weight(p, h, order)
    return w


def single_path_pf(i: int, j: int, order: int | None = None) -> MPoly:
    """Brute-force sum over paths from (i, 0) to (0, j+2) (plus the final step).

    Steps on the axis weigh 1, special steps x, other steps y; with ``order``
    given, steps at height ``order`` carry an extra z.
    """
    total = MPoly.const(0)
    for path in _paths_between(i, j + 2):
        total = total + path_weight(path, order)
    return total


def nonintersecting_families(n: int) -> Iterator[PathFamily]:
    """Every non-intersecting family with start set S subset of {0..n-2} and
    end set {(0, s+2) : s in S}, found by direct search."""
    starts = list(range(n - 1))
    for r in range(len(starts) + 1):
        for S in combinations(sorted(starts, reverse=True), r):
            # endpoints are matched in the same order (top path to top end);
            # other matchings are forced to intersect in the plane
            for combo in product(*[list(_paths_between(s, s + 2)) for s in S]):
                F = PathFamily(tuple(combo))
                if F.is_non_intersecting():
                    yield F


def family_weight(F: PathFamily, order: int | None = None) -> MPoly:
    w = MPoly.const(1)
    for p in F.paths:
        w = w * path_weight(p, order)
    return w
