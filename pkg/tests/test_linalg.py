from fractions import Fraction
from itertools import permutations

from hypothesis import given, settings, strategies as st

from asmdpp import linalg
from asmdpp.exactalg import MPoly, NuElem


def leibniz(m):
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = sign
        for i in range(n):
            term = term * m[i][perm[i]]
        total = total + term
    return total


int_matrices = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=n, max_size=n))


@settings(max_examples=80, deadline=None)
@given(int_matrices)
def test_bareiss_and_expansion_match_leibniz(m):
    expected = leibniz(m)
    assert linalg.det_bareiss(m) == expected
    assert linalg.det_expansion(m) == expected


@settings(max_examples=40, deadline=None)
@given(int_matrices.filter(lambda m: len(m) >= 2))
def test_desnanot_jacobi(m):
    assert linalg.desnanot_jacobi_check(m)


def test_symbolic_vandermonde():
    xs = [MPoly.var(f"x{i}") for i in range(4)]
    m = [[x ** k for k in range(4)] for x in xs]
    expected = MPoly.const(1)
    for i in range(4):
        for j in range(i + 1, 4):
            expected = expected * (xs[j] - xs[i])
    assert linalg.det(m) == expected


def test_det_with_zero_pivot():
    assert linalg.det([[0, 1], [1, 0]]) == -1
    assert linalg.det([[0, 0], [1, 2]]) == 0


def test_nu_matrix_uses_expansion():
    nu = NuElem.nu()
    m = [[1 - nu, nu], [nu, 1 - nu]]
    assert (linalg.det(m) - (1 - 2 * nu)).is_zero()


def test_sandwich_truncate_matches_explicit_product():
    a, b = Fraction(2, 3), -5
    A = [[i * 4 + j + 1 for j in range(4)] for i in range(4)]
    S = linalg.shift_matrix(4)
    left = linalg.matadd(linalg.identity(4), linalg.scale(-a, S))
    right = linalg.matadd(linalg.identity(4), linalg.scale(-b, linalg.transpose(S)))
    assert linalg.equal(linalg.sandwich_truncate(a, A, b), linalg.matmul(linalg.matmul(left, A), right))
    assert linalg.det(linalg.sandwich_truncate(a, A, b)) == linalg.det(A)


def test_minor():
    m = [[1, 2, 3], [4, 5, 6], [7, 8, 10]]
    assert linalg.minor(m, [0], [0]) == [[5, 6], [8, 10]]
