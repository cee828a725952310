"""Seeded random rationals, with resampling when a draw is degenerate."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, List, Sequence, TypeVar

from asmdpp.errors import DegenerateParameters, TSystemZeroDivision

R = TypeVar("R")


def random_rational(rng: random.Random, bound: int = 9, nonzero: bool = True) -> Fraction:
    while True:
        x = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if x or not nonzero:
            return x


def resample(draw: Callable[[random.Random], R], rng: random.Random, tries: int = 1000,
             errors=(DegenerateParameters, TSystemZeroDivision, ZeroDivisionError)) -> R:
    """Call ``draw(rng)`` until it does not raise one of ``errors``."""
    for _ in range(tries):
        try:
            return draw(rng)
        except errors:
            continue
    raise DegenerateParameters(f"no non-degenerate sample in {tries} draws")


def ik_sample(n: int, rng: random.Random, bound: int = 9):
    """(q, zeta, omega, brute force, IK value) at a non-degenerate rational point."""
    from asmdpp.asm.sixv import ik_determinant, sixv_bruteforce

    def draw(r):
        q = random_rational(r, bound)
        if q * q == 1:
            raise DegenerateParameters("q^2 = 1 kills the c weight")
        zeta = [random_rational(r, bound) for _ in range(n)]
        omega = [random_rational(r, bound) for _ in range(n)]
        ik = ik_determinant(q, zeta, omega)
        return q, zeta, omega, sixv_bruteforce(q, zeta, omega), ik

    return resample(draw, rng)


def homogeneous_sample(rng: random.Random, bound: int = 9):
    """A rational (q, r) at which a, b and c are all nonzero."""
    from asmdpp.asm.homog import homogeneous_weights

    def draw(r):
        q, rr = random_rational(r, bound), random_rational(r, bound)
        if 0 in homogeneous_weights(q, rr):
            raise DegenerateParameters("a vanishing homogeneous weight")
        return q, rr

    return resample(draw, rng)


def random_int_matrix(n: int, rng: random.Random, bound: int = 5) -> List[List[int]]:
    return [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]


def lambda_det_sample(n: int, rng: random.Random, lam, bound: int = 5):
    """An integer matrix whose T-system evaluation never divides by zero, with
    both lambda-determinant values."""
    from asmdpp.asm.lambdadet import lambda_det_expansion, lambda_det_tsystem

    def draw(r):
        a = random_int_matrix(n, r, bound)
        return a, lambda_det_tsystem(a, lam), lambda_det_expansion(a, lam)

    return resample(draw, rng)


def rationals(rng: random.Random, k: int, bound: int = 9) -> Sequence[Fraction]:
    return [random_rational(rng, bound) for _ in range(k)]
