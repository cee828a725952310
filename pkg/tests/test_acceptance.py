"""Acceptance criteria 1-11.

Each test prints one ``[PASS]``/``[FAIL]`` line (also collected into the
terminal summary by conftest.py).  Run the file directly to get just the
eleven lines: ``python tests/test_acceptance.py``.
"""

import random
from fractions import Fraction

from asmdpp import linalg
from asmdpp import lorentzian as lz
from asmdpp.asm import (
    count_asm, lambda_det_expansion, lambda_det_tsystem, z_asm_bruteforce, z_asm_det, zasm_bridge_check,
)
from asmdpp.asm.homog import homogeneous_6v, homogeneous_6v_bruteforce, z_asm_refined_det
from asmdpp.dpp import (
    asm_dpp_sandwich_check, count_dpp, d_entry, gf_identity_check, h_matrix, m_dpp,
    quadratic_relation_check, z_dpp_bruteforce, z_dpp_det, z_dpp_refined_det, z_dpp_refined_nu_det,
)
from asmdpp.dpp.sandwich import plain_gf_identity_polynomial
from asmdpp.exactalg import MPoly, NuElem, parse
from asmdpp.genfun import GFMatrix, property_checks
from asmdpp.sampling import homogeneous_sample, ik_sample, lambda_det_sample, random_rational

RESULTS = {}
Zv = MPoly.var("z")


def record(num: int, title: str, checks: dict):
    ok = all(bool(v) for v in checks.values())
    failed = [k for k, v in checks.items() if not v]
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {num:2d}: {title}"
    if failed:
        line += "  (failed: " + ", ".join(failed) + ")"
    RESULTS[num] = line
    print(line)
    return ok


def _zxy(Z):
    return Z.partial_eval({"z": 1, "w": 1}).pruned()


# --------------------------------------------------------------------------

def test_criterion_01_golden_polynomials():
    golden = str(parse("1 + z*y + z*x*y + y + z*y^2 + z^2*y^2 + z^2*y^3"))
    checks = {
        "asm": str(z_asm_bruteforce(3).partial_eval({"w": 1}).pruned()) == golden,
        "dpp": str(z_dpp_bruteforce(3).partial_eval({"w": 1}).pruned()) == golden,
    }
    assert record(1, "golden order-3 polynomials (exact canonical string)", checks)


def test_criterion_02_asm_dpp_identity():
    checks = {}
    for n in range(1, 7):
        checks[f"Z n={n}"] = z_asm_bruteforce(n) == z_dpp_bruteforce(n)
        checks[f"count n={n}"] = count_asm(n) == count_dpp(n)
    assert record(2, "Z_ASM = Z_DPP in x, y, z, w for n = 1..6; counts agree", checks)


def test_criterion_03_asm_determinant():
    checks = {}
    for n in range(1, 7):
        d = z_asm_det(n)
        checks[f"n={n}"] = d.a1 == 0 and d.a0 == _zxy(z_asm_bruteforce(n, w=False))
    assert record(3, "det((1-nu)I + nu G) = Z_ASM(x,y,1), nu-part zero, n = 1..6", checks)


def test_criterion_04_dpp_determinant():
    checks = {}
    H = h_matrix()
    for n in range(1, 8):
        Z = _zxy(z_dpp_bruteforce(n, w=False))
        checks[f"det(I+D) n={n}"] = z_dpp_det(n) == Z
        # the same value from the n x n truncation of M_DPP = I + H
        checks[f"det(I+H) n={n}"] = linalg.det(m_dpp(n)) == Z
    checks["H reproduces D, i,j <= 8"] = all(
        H.entry(i + 1, j + 1) == d_entry(i, j) for i in range(9) for j in range(9)) and all(
        H.entry(0, j) == 0 for j in range(10))
    assert record(4, "det(I + D) = Z_DPP(x,y,1) for n = 1..7; H coefficients give D", checks)


def test_criterion_05_refined_determinants():
    checks = {}
    for n in range(1, 6):
        Z = z_asm_bruteforce(n, w=False)
        target = NuElem(Z, (Zv - 1) * Z)
        checks[f"asm n={n}"] = (z_asm_refined_det(n) - target).is_zero()
        checks[f"dpp n={n}"] = (z_dpp_refined_nu_det(n) - target).is_zero()
    for n in range(1, 5):
        checks[f"det(I+D') n={n}"] = z_dpp_refined_det(n) == z_dpp_bruteforce(n, w=False)
    assert record(5, "refined determinants = (1 + nu(z-1)) Z(x,y,z); det(I+D') = Z_DPP(x,y,z)", checks)


def test_criterion_06_sandwich_identities():
    checks = {"gf plain (polynomial form)": plain_gf_identity_polynomial(),
              "gf plain (rational form)": gf_identity_check(False)}
    for n in range(1, 5):
        checks[f"gf refined n={n}"] = gf_identity_check(True, n)
    for n in range(1, 7):
        checks[f"sandwich plain n={n}"] = asm_dpp_sandwich_check(n, False)
        checks[f"sandwich refined n={n}"] = asm_dpp_sandwich_check(n, True)
    assert record(6, "generating-function identities and truncated sandwiches, n = 1..6", checks)


def test_criterion_07_ik_and_homogeneous():
    checks = {}
    rng = random.Random(2024)
    for n in range(1, 5):
        same = [s[3] == s[4] for s in (ik_sample(n, rng) for _ in range(20))]
        checks[f"IK n={n} (20 samples)"] = all(same) and len(same) == 20
    rng = random.Random(77)
    for n in range(1, 5):
        for k in range(3):
            q, r = homogeneous_sample(rng)
            checks[f"homogeneous n={n} #{k}"] = homogeneous_6v(q, r, n) == homogeneous_6v_bruteforce(q, r, n)
            checks[f"bridge n={n} #{k}"] = zasm_bridge_check(q, r, n)
    assert record(7, "IK determinant = DWBC sum (n <= 4, 20 samples each); homogeneous bridge", checks)


def test_criterion_08_lambda_determinant():
    lam = MPoly.var("lambda")
    rng = random.Random(8)
    checks = {}
    for n in range(2, 6):
        ok = True
        for _ in range(20):
            a, t, e = lambda_det_sample(n, rng, lam)
            ok = ok and (t - e) == 0
            # specialise the symbolic value: a direct lambda = -1 run can hit a zero divisor
            ok = ok and t.evaluate({"lambda": -1}) == linalg.det(a) == lambda_det_expansion(a, -1)
        checks[f"n={n} (20 matrices)"] = ok
    ones = [[1] * 3 for _ in range(3)]
    checks["all ones"] = lambda_det_tsystem(ones, lam) == (1 + lam) ** 3 == lambda_det_expansion(ones, lam)
    assert record(8, "lambda-determinant: T-system = ASM expansion; lambda=-1 is det; (1+lambda)^3", checks)


def test_criterion_09_structured_algebra():
    checks = dict(property_checks(8))
    for k in range(9):
        checks[f"detT k={k}"] = lz.det_t_structured_check(k)
        checks[f"detL/U k={k}"] = lz.det_l_check(k)
    a, b, a2, b2 = (MPoly.var(s) for s in ("alpha", "beta", "alpha2", "beta2"))
    uncorrected_closed = []
    for k in range(4):
        res = lz.ul_det_check(a, b, a2, b2, k)
        checks[f"UL intermediate k={k}"] = res["intermediate"]
        checks[f"UL closed form k={k}"] = res["closed_form"]
        uncorrected_closed.append(res["uncorrected_closed_form"])
    rng = random.Random(9)
    u, v = MPoly.var("u"), MPoly.var("v")
    for n in range(1, 7):
        p, q, ca, cb = (random_rational(rng, 5) for _ in range(4))
        f = GFMatrix(MPoly.const(1), 1 - ca * u - cb * v - (ca * cb + 1) * u * v)
        checks[f"unitri n={n}"] = lz.unitri_check(f, p, q, n)
    ok = record(9, "structured products/inverses (size 8), determinant formulas, UL truncation, unitri", checks)
    # informational: the simplified UL form with a single (1-bb')^(k+1) fails beyond k = 0
    print(f"           note: simplified UL closed form over (1-bb')^(k+1) holds for k = 0..3: {uncorrected_closed}")
    assert ok


def test_criterion_10_lorentzian_suite():
    g, a = MPoly.var("g"), MPoly.var("a")
    G = lz.t_gf_matrix(g, a)
    checks = {
        "entry = GF = paths, i,j <= 10": all(
            lz.t_entry(g, a, i, j) == G.entry(i, j) == lz.t_path_pf(g, a, i, j) for i in range(11) for j in range(11)),
        "T = V V^t and det = g^(k(k+1)), k <= 8": all(lz.vvt_factorization_check(g, a, k) for k in range(9)),
    }
    c = lz.commute_check(order=12)
    checks["T_{1,3} commutator to order 12"] = c["st_family"][0]
    checks["on-variety commutator to order 12"] = c["on_variety"][0]
    checks["off-variety commutator fails"] = (not c["off_variety"][0]) and c["off_variety"][1] is not None
    checks["lambda-series identity to order 8"] = lz.spectral_lambda_identity(8)
    checks["orthonormality to q-order 10"] = lz.orthonormality_check(3, 10)
    checks["Lambda^(m) = g^(2m)(1 + O(g^2))"] = lz.eigenvalue_leading_check(Fraction(1, 3), 3, 10)
    checks["l_t(a) = exp(-a M_t), k=4, order 6"] = lz.ell_exp_check(size=4, order=6)
    checks["l_t pseudo-exponential"] = lz.ell_pseudoexp_check(size=4, order=6)
    checks["T_{s,t} addition"] = lz.st_addition_check()
    checks["tau_{r,t} addition (symbolic)"] = lz.tau_addition_check()
    checks["tau_{r,t} at r=1"] = lz.tau_reduces_to_ell()
    rng = random.Random(10)
    var_ok = True
    for _ in range(10):
        p, q = 1 + abs(random_rational(rng, 6)), 1 + abs(random_rational(rng, 6))
        r = lz.variety_intersection(p, q)
        var_ok = var_ok and r["phi_ok"] and r["psi_ok"]
    r = lz.variety_intersection(2, 2)
    checks["variety certificates"] = var_ok and (r["x"], r["y"]) == (Fraction(4, 25), Fraction(4, 25))
    ok = record(10, "Lorentzian transfer matrix suite", checks)
    print("           note: the tau_{r,t} check uses alpha without the extra factor t "
          f"(uncorrected variant passes: {lz.tau_addition_check(uncorrected=True)})")
    assert ok


def test_criterion_11_quadratic_relation():
    checks = {}
    for n in range(2, 6):
        checks[f"asm n={n}"] = quadratic_relation_check(z_asm_bruteforce, n)
        checks[f"dpp n={n}"] = quadratic_relation_check(z_dpp_bruteforce, n)
    assert record(11, "quadratic relation in z, w for n = 2..5", checks)


if __name__ == "__main__":  # pragma: no cover
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    for t in tests:
        try:
            t()
        except AssertionError:
            pass
