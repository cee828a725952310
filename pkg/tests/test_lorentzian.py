from fractions import Fraction
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from asmdpp import lorentzian as lz
from asmdpp.errors import DegenerateParameters
from asmdpp.exactalg import MPoly, to_ratfun

g, a = MPoly.var("g"), MPoly.var("a")


def test_small_entries():
    assert lz.t_entry(g, a, 0, 0) == 1
    assert lz.t_entry(g, a, 1, 1) == g * g + a * a * g * g
    assert lz.t_entry(g, 1, 2, 2) == 6 * g ** 4


def test_a_equal_one_is_binomial():
    for i in range(6):
        for j in range(6):
            assert lz.t_entry(g, 1, i, j) == comb(i + j, i) * g ** (i + j)


def enumerate_paths(i, j):
    """Brute force: every arrangement of i L-steps and j U-steps from (i, 0)."""
    total = 0
    for ups in combinations(range(i + j), j):
        x, y, w = i, 0, 1
        for k in range(i + j):
            below = y < x
            if k in ups:
                w, y = w * (g if below else g * a), y + 1
            else:
                w, x = w * (g * a if below else g), x - 1
        total = total + w
    return total


def test_path_sum_against_enumeration():
    for i in range(5):
        for j in range(5):
            assert lz.t_path_pf(g, a, i, j) == enumerate_paths(i, j)


def test_entry_gf_path_agree():
    G = lz.t_gf_matrix(g, a)
    S = lz.t_structured(g, a)
    for i in range(7):
        for j in range(7):
            e = lz.t_entry(g, a, i, j)
            assert G.entry(i, j) == e
            assert lz.t_path_pf(g, a, i, j) == e
            assert S.entry(i, j) == e


def test_phi():
    assert lz.phi(Fraction(1, 2), 1) == 2
    assert lz.LorentzParams(Fraction(1, 2), Fraction(1, 3)).phi() == lz.phi(Fraction(1, 2), Fraction(1, 3))
    with pytest.raises(DegenerateParameters):
        lz.LorentzParams(0, 1)


def test_commuting_family_membership():
    assert lz.in_commuting_family(g, a)


def test_v_gf_matches_structured():
    from asmdpp.genfun import GFMatrix
    V, Vs = GFMatrix.from_ratfun(lz.v_gf(g, a)), lz.v_structured(g, a)
    assert all(to_ratfun(V.entry(i, j)) == to_ratfun(Vs.entry(i, j)) for i in range(6) for j in range(6))


@pytest.mark.parametrize("k", range(7))
def test_vvt_and_det(k):
    assert lz.vvt_factorization_check(g, a, k)


def test_st_commutator():
    ok, first = lz.commute_check_st(1, 3, order=8)
    assert ok and first is None


def test_on_and_off_variety():
    assert lz.commute_check_lorentz(Fraction(1, 2), Fraction(2, 3), order=10) == (True, None)
    ok, first = lz.commute_check_lorentz(Fraction(1, 2), Fraction(2, 3), order=10, a_prime=Fraction(5, 7))
    assert not ok and first == 1


def test_partner_stays_on_variety():
    # phi(kg, a') - phi(g, a) vanishes as a g-series
    k, av, N = Fraction(3, 2), Fraction(2, 5), 10
    ap = lz.commuting_partner(k, av, N)
    gs = lz.GradedSeries.variable("g", N)
    lhs = (1 - gs * gs * k * k * (1 - ap * ap)) * av
    rhs = (1 - gs * gs * (1 - av * av)) * ap * k
    assert lhs == rhs


def test_addition_formulas():
    assert lz.st_addition_check()
    assert lz.lt_addition_check(5)
    assert lz.ell_exp_check(size=4, order=6)
    assert lz.ell_pseudoexp_check(size=3, order=5)


def test_mt_gf_matches_rule():
    from asmdpp.genfun import GFMatrix
    t = MPoly.var("t")
    G = GFMatrix.from_ratfun(lz.m_t_gf(t))
    M = lz.m_t_matrix(t, 5)
    assert all(G.entry(i, j) == M[i][j] for i in range(5) for j in range(5))


def test_tau_corrected_vs_uncorrected():
    assert lz.tau_addition_check()
    assert lz.tau_reduces_to_ell()
    assert not lz.tau_addition_check(uncorrected=True)
    assert not lz.tau_reduces_to_ell(uncorrected=True)


def test_spectral():
    assert lz.spectral_lambda_identity(4)
    assert lz.orthonormality_check(2, 8)
    assert lz.eigenvalue_leading_check(Fraction(1, 3), 2, 8)
    assert lz.eigenvector_check(Fraction(2, 7), 1, order=6)


def test_spectral_data():
    q, l = MPoly.var("q"), MPoly.var("l")
    sd = lz.SpectralData(q, l)
    assert sd.eigenvalue(0) == (1 - to_ratfun(l * q * q)) / (1 - to_ratfun(q * q))
    with pytest.raises(DegenerateParameters):
        lz.SpectralData(1, l)


@pytest.mark.parametrize("k", range(6))
def test_structured_determinants(k):
    assert lz.det_t_structured_check(k)
    assert lz.det_l_check(k)


def test_variety_example():
    r = lz.variety_intersection(2, 2)
    assert (r["x"], r["y"], r["psi"]) == (Fraction(4, 25), Fraction(4, 25), Fraction(5, 2))


def test_root_formula_swaps_roles():
    p, q = Fraction(3), Fraction(5, 2)
    sx, sy = lz.intersection_roots(p, q)
    x, y = sx * sx, sy * sy
    assert lz.phi_xy(x, y, sx) == p + 1 / p
    assert lz.psi(x, y, sy) == q + 1 / q


pq = st.fractions(min_value=Fraction(8, 7), max_value=6, max_denominator=7)


@settings(max_examples=40, deadline=None)
@given(pq, pq)
def test_variety_certificates(p, q):
    r = lz.variety_intersection(p, q)
    assert r["phi_ok"] and r["psi_ok"]
    s = lz.variety_intersection(q, p)
    assert (s["x"], s["y"]) == (r["y"], r["x"])


def test_variety_degenerate():
    with pytest.raises(DegenerateParameters):
        lz.variety_intersection(1, 1)


def test_g_bridge():
    assert lz.g_bridge_check(5)
