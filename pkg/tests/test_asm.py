import random
from fractions import Fraction
from itertools import permutations, product

import pytest
from hypothesis import given, settings, strategies as st

from asmdpp.asm import (
    ASM, apm_factorization_check, asm_stats, asm_to_6v, count_asm, enumerate_6v, enumerate_asm, ik_determinant,
    is_asm, lambda_det_expansion, lambda_det_tsystem, sixv_bruteforce, z_asm_bruteforce, z_asm_det,
    zasm_bridge_check,
)
from asmdpp.asm.homog import g_structured, homogeneous_6v, homogeneous_6v_bruteforce, z_asm_refined_det
from asmdpp.errors import DegenerateSpectralParameters, InvalidASM, TSystemZeroDivision
from asmdpp.exactalg import MPoly, NuElem, parse
from asmdpp.linalg import det
from asmdpp.sampling import homogeneous_sample, ik_sample, lambda_det_sample

lam = MPoly.var("lambda")


def naive_asms(n):
    return [m for m in product((-1, 0, 1), repeat=n * n)
            if is_asm([m[i * n:(i + 1) * n] for i in range(n)])]


def perm_inversions(p):
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])


# ---------------------------------------------------------------------------
# objects and statistics

@pytest.mark.parametrize("n", [1, 2, 3])
def test_enumeration_matches_naive_filter(n):
    assert sorted(B.entries for B in enumerate_asm(n)) == sorted(
        tuple(tuple(m[i * n:(i + 1) * n]) for i in range(n)) for m in naive_asms(n))


def test_counts():
    assert [count_asm(n) for n in range(1, 6)] == [1, 2, 7, 42, 429]


def test_rejects_non_asm():
    with pytest.raises(InvalidASM):
        ASM(((1, 1), (0, 0)))
    assert not is_asm([[0, 1, 0], [1, -1, 1], [0, 1, 1]])


@pytest.mark.parametrize("n", [3, 4])
def test_permutation_inversions(n):
    for p in permutations(range(n)):
        B = ASM(tuple(tuple(int(p[i] == j) for j in range(n)) for i in range(n)))
        st_ = asm_stats(B)
        assert st_.inv == perm_inversions(p) and st_.nminus == 0


def test_inversions_of_the_minus_one_matrix():
    B = ASM(((0, 1, 0), (1, -1, 1), (0, 1, 0)))
    st_ = asm_stats(B)
    assert (st_.inv, st_.nminus, st_.t, st_.b) == (2, 1, 1, 1)


def test_golden_z3():
    golden = parse("1 + z*y + z*x*y + y + z*y^2 + z^2*y^2 + z^2*y^3")
    assert str(z_asm_bruteforce(3).partial_eval({"w": 1}).pruned()) == str(golden)


def test_z_at_ones_is_count():
    for n in range(1, 5):
        assert z_asm_bruteforce(n).evaluate({"x": 1, "y": 1, "z": 1, "w": 1}) == count_asm(n)


def test_x_zero_counts_permutations_by_inversions():
    # with x = 0 only permutation matrices survive
    p = z_asm_bruteforce(4, w=False).partial_eval({"x": 0, "z": 1}).pruned()
    expected = MPoly.const(0)
    for perm in permutations(range(4)):
        expected = expected + MPoly.var("y") ** perm_inversions(perm)
    assert p == expected


# ---------------------------------------------------------------------------
# lambda-determinant

def test_lambda_det_2x2():
    a = [[MPoly.var(f"a{i}{j}") for j in range(2)] for i in range(2)]
    expected = a[0][0] * a[1][1] + lam * a[0][1] * a[1][0]
    assert lambda_det_tsystem(a, lam) == expected
    assert lambda_det_expansion(a, lam) == expected


def test_lambda_det_all_ones():
    ones = [[1] * 3 for _ in range(3)]
    assert lambda_det_tsystem(ones, lam) == (1 + lam) ** 3
    assert lambda_det_expansion(ones, lam) == (1 + lam) ** 3


def test_lambda_det_symbolic_3x3_is_laurent():
    a = [[MPoly.var(f"a{i}{j}") for j in range(3)] for i in range(3)]
    val = lambda_det_tsystem(a, lam)
    assert val == lambda_det_expansion(a, lam)
    assert val.min_degree("a11") == -1


@pytest.mark.parametrize("n", [2, 3, 4])
def test_lambda_minus_one_is_det(n):
    rng = random.Random(n)
    for _ in range(5):
        a, t, e = lambda_det_sample(n, rng, -1)
        assert t == e == det(a)


def test_tsystem_zero_division_reports_site():
    with pytest.raises(TSystemZeroDivision) as info:
        lambda_det_tsystem([[1, 1, 1], [1, 0, 1], [1, 1, 1]], lam)
    assert len(info.value.site) == 3


# ---------------------------------------------------------------------------
# six-vertex model

@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_6v_bijection(n):
    configs = list(enumerate_6v(n))
    assert len(configs) == count_asm(n)
    assert all(c.is_valid() for c in configs)
    assert {c.to_asm() for c in configs} == set(enumerate_asm(n))
    assert all(asm_to_6v(B).to_asm() == B for B in enumerate_asm(n))


def test_vertex_count_identities():
    for n in range(1, 5):
        for B in enumerate_asm(n):
            k = asm_to_6v(B).counts()
            s = asm_stats(B)
            assert 2 * s.nminus == k["c"] - n
            assert 2 * (s.inv - s.nminus) == k["a"]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_ik_matches_bruteforce(n):
    rng = random.Random(100 + n)
    for _ in range(6):
        q, zeta, omega, brute, ik = ik_sample(n, rng)
        assert brute == ik


def test_ik_degenerate():
    with pytest.raises(DegenerateSpectralParameters):
        ik_determinant(Fraction(2), [1, -1], [2, 3])


def test_homogeneous_and_bridge():
    rng = random.Random(7)
    for n in (1, 2, 3):
        q, r = homogeneous_sample(rng)
        assert homogeneous_6v(q, r, n) == homogeneous_6v_bruteforce(q, r, n)
        assert zasm_bridge_check(q, r, n)


@pytest.mark.parametrize("sign", [1, -1])
def test_apm_factorization(sign):
    assert apm_factorization_check(Fraction(3, 2), Fraction(2, 5), 4, sign)


# ---------------------------------------------------------------------------
# determinant formula

@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_m_asm_determinant(n):
    d = z_asm_det(n)
    assert d.a1 == 0
    assert d.a0 == z_asm_bruteforce(n, w=False).partial_eval({"z": 1}).pruned()


@pytest.mark.parametrize("n", [1, 2, 3])
def test_refined_determinant(n):
    Z = z_asm_bruteforce(n, w=False)
    d = z_asm_refined_det(n)
    assert (d - NuElem(Z, (MPoly.var("z") - 1) * Z)).is_zero()


nz = st.fractions(min_value=-3, max_value=3, max_denominator=4)


@settings(max_examples=25, deadline=None)
@given(nz.filter(lambda t: t != 0), nz.filter(lambda t: t != 1))
def test_determinant_at_a_rational_root(xv, nu):
    # choose nu and x, solve x nu (1 - nu) = nu + y (1 - nu) for y, then take a numeric determinant
    yv = (xv * nu * (1 - nu) - nu) / (1 - nu)
    at = {"x": xv, "y": yv}
    G = g_structured()
    for n in (2, 3, 4):
        m = [[(1 - nu) * (i == j) + nu * G.entry(i, j).evaluate(at) for j in range(n)] for i in range(n)]
        Z = z_asm_bruteforce(n, w=False).partial_eval({"z": 1})
        assert det(m) == Z.evaluate(at)
