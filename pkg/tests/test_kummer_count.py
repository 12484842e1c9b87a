import random

import pytest

from prymrank.gf import make_ext
from prymrank.hasse_witt import Genus2Curve
from prymrank.kummer_count import (
    KUMMER_SCAN_LIMIT, count_curve, count_plane_curve, first_nonsquare, jac_count,
    jac_count_from_zeta, kummer_count_naive, kummer_counts, qss_scan, quadratic_twist,
    supersingular_congruences, zeta_coeffs,
)
from prymrank.prym import kummer_surface
from prymrank.search import curve_p_rank


def x6m1(p):
    F = make_ext(p)
    return Genus2Curve.make(F, [F.neg(1), 0, 0, 0, 0, 0, 1])


def random_curves(F, n, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        Z = Genus2Curve.make(F, [F.random(rng) for _ in range(6)] + [F.random(rng, True)])
        if Z.squarefree:
            out.append(Z)
    return out


def test_x6_minus_1_over_f5():
    Z = x6m1(5)
    assert count_curve(Z, 5) == 6
    z = zeta_coeffs(Z, 5)
    assert (z.n1, z.n2, z.a1, z.a2) == (6, 46, 0, 10)
    assert jac_count(Z, 5) == jac_count_from_zeta(z) == 36


def test_x6_minus_1_twist_is_by_two():
    Z = x6m1(5)
    assert first_nonsquare(make_ext(5)) == 2
    W = quadratic_twist(Z, 5)
    assert list(W.d) == [2, 0, 0, 0, 0, 0, 3]


def test_x6_minus_1_kummer_is_one_mod_5():
    Z = x6m1(5)
    n = kummer_count_naive(kummer_surface(Z), 5)
    assert n == 36 and n % 5 == 1


def test_degree_five_has_one_point_at_infinity():
    F = make_ext(7)
    Z = Genus2Curve.make(F, [1, 2, 0, 0, 0, 1, 0])
    brute = sum(1 for x in F.elements() for z in F.elements() if F.mul(z, z) == Z.D(x))
    assert count_curve(Z, 7) == brute + 1


@pytest.mark.parametrize("q", [3, 5, 9])
def test_twist_counts_sum(q):
    p = min(d for d in range(2, q + 1) if q % d == 0)
    F = make_ext(p, 1 if q == p else 2)
    for Z in random_curves(F, 10, q):
        W = quadratic_twist(Z, q)
        assert count_curve(Z, q) + count_curve(W, q) == 2 * (q + 1)
        zw, zz = zeta_coeffs(W, q), zeta_coeffs(Z, q)
        assert (zw.a1, zw.a2) == (-zz.a1, zz.a2)
        assert count_curve(quadratic_twist(W, q), q) == count_curve(Z, q)


def test_twist_class_is_independent_of_the_nonsquare():
    F = make_ext(7)
    Z = random_curves(F, 1, 0)[0]
    nonsq = [x for x in F.elements() if x and not F.is_square(x)]
    counts = {count_curve(quadratic_twist(Z, 7, lam), 7) for lam in nonsq}
    assert len(counts) == 1


def test_twist_rejects_square():
    with pytest.raises(ValueError):
        quadratic_twist(x6m1(5), 5, 4)


@pytest.mark.parametrize("p", [3, 5])
def test_jacobian_formulas_agree(p):
    F = make_ext(p)
    for Z in random_curves(F, 50, p):
        assert jac_count(Z, p) == jac_count_from_zeta(zeta_coeffs(Z, p))
        assert jac_count(Z, p * p) % jac_count(Z, p) == 0


@pytest.mark.parametrize("q", [3, 5])
def test_kummer_three_way(q):
    F = make_ext(q)
    for Z in random_curves(F, 20, 100 + q):
        kc = kummer_counts(Z, q)
        assert kc.three_way and kc.naive == kc.formula == kc.twist_average


def test_counts_over_extension_field():
    F = make_ext(3, 2)
    for Z in random_curves(F, 4, 9):
        assert kummer_counts(Z, 9).three_way


def test_curve_over_f3_counted_over_f9():
    Z = random_curves(make_ext(3), 1, 1)[0]
    z = zeta_coeffs(Z, 3)
    assert count_curve(Z, 9) == z.n2


def test_supersingular_congruences_on_rank_zero_curves():
    found = 0
    for p in (3, 5):
        F = make_ext(p)
        for Z in random_curves(F, 200, 7 * p):
            if curve_p_rank(Z) == 0:
                assert supersingular_congruences(zeta_coeffs(Z, p)) == (True, True)
                found += 1
    assert found > 0


def test_ordinary_negative_control():
    F = make_ext(3)
    assert any(zeta_coeffs(Z, 3).a2 % 3 for Z in random_curves(F, 50, 3)
               if curve_p_rank(Z) == 2)


def test_weil_bound_on_scanned_curves():
    for q in (3, 5, 7):
        for Z in random_curves(make_ext(q), 20, q):
            z = zeta_coeffs(Z, q)
            assert abs(z.a1) <= 4 * q ** 0.5


def test_scan_limits():
    Z = x6m1(5)
    with pytest.raises(ValueError):
        kummer_count_naive(kummer_surface(Z), 5 ** 5)
    assert KUMMER_SCAN_LIMIT == 1000
    with pytest.raises(ValueError):
        count_curve(Z, 6)


def test_plane_curve_count_fermat():
    from prymrank.mpoly import parse_mpoly
    F = make_ext(5)
    X = parse_mpoly(F, "u^4 + v^4 + w^4", ["u", "v", "w"])
    # x^4 is 1 for x != 0, so u^4 + v^4 + w^4 = number of nonzero coordinates mod 5
    assert count_plane_curve(X) == 0


def test_qss_scan_reports_findings():
    res = qss_scan(x6m1(5), 5, limit=30)
    assert res and all(r.divisible == (r.points % 5 == 0) for r in res)
