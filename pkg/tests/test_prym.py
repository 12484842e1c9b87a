import random

import pytest
from hypothesis import given, strategies as st

from prymrank.gf import UniPoly, embedding, make_ext, roots_in_ext
from prymrank.hasse_witt import Genus2Curve, p_rank
from prymrank.mpoly import MPoly, evaluate, linear_form, pack, parse_mpoly, substitute
from prymrank.prym import (
    Plane, QuadTriple, bruin_prym_sextic, bruin_quartic, dehomogenize, family_simple_z,
    family_z_alpha, family_z_tu, is_smooth_plane_quartic, kummer_phi, kummer_surface,
    plane_section, proportional, simple_z_coeffs, singular_points_bruteforce,
)
from prymrank.search import analyze_section, curve_p_rank

UVW = ["u", "v", "w"]
X4 = ["X1", "X2", "X3", "X4"]
ROW_3_0 = [2, 0, 2, 0, 0, 1, 1, 1, 1, 0, 1, 2, 2, 2, 2]


def rand_ternary_quartic(F, rng, terms=15):
    out = {}
    for a in range(5):
        for b in range(5 - a):
            if rng.random() < terms / 15:
                out[pack((a, b, 4 - a - b))] = F.random(rng)
    return MPoly(F, 3, out)


def random_change(F, rng):
    while True:
        M = [[F.random(rng) for _ in range(3)] for _ in range(3)]
        det = F.sub(F.add(F.add(F.mul(M[0][0], F.sub(F.mul(M[1][1], M[2][2]), F.mul(M[1][2], M[2][1]))),
                                F.mul(M[0][1], F.sub(F.mul(M[1][2], M[2][0]), F.mul(M[1][0], M[2][2])))),
                          F.mul(M[0][2], F.sub(F.mul(M[1][0], M[2][1]), F.mul(M[1][1], M[2][0])))), 0)
        if det:
            return [linear_form(F, row) for row in M]


def random_curve(F, rng):
    while True:
        Z = Genus2Curve.make(F, [F.random(rng) for _ in range(6)] + [F.random(rng, True)])
        if Z.squarefree:
            return Z


def random_point(Z, L, rng):
    emb = embedding(Z.ctx, L)
    D = UniPoly(L, [emb(c) for c in Z.d])
    while True:
        x = L.random(rng)
        z = L.sqrt(D(x))
        if z is not None:
            return x, z


# -- Bruin construction -------------------------------------------------------

def test_row_3_0_quartic_matches_printed_up_to_scalar():
    F = make_ext(3)
    X = bruin_quartic(QuadTriple.from_qvector(F, ROW_3_0))
    printed = parse_mpoly(F, "2*u^4 + 2*u^3*v + u^3 + 2*u^2*v^2 + u^2*v + 2*u^2 + 2*u*v^3"
                             " + u*v^2 + u*v + 2*u + v^3 + v^2 + 2*v + 1", ["u", "v"])
    assert proportional(dehomogenize(X, 2, 1), printed) is not None


def test_row_3_0_sextic():
    F = make_ext(3)
    Z = bruin_prym_sextic(QuadTriple.from_qvector(F, ROW_3_0))
    expected = [F.neg(c) for c in (1, 1, 2, 0, 1, 2, 0)]
    assert list(Z.d) == expected


def test_qvector_roundtrip():
    F = make_ext(7)
    rng = random.Random(0)
    for _ in range(20):
        q = [rng.randrange(7) for _ in range(15)]
        assert QuadTriple.from_qvector(F, q).qvector() == q


def test_zero_middle_form_is_reducible_and_singular():
    F = make_ext(5)
    q = [1, 2, 1, 0, 3, 4, 0, 0, 0, 2, 0, 1, 1, 1, 3]
    X = bruin_quartic(QuadTriple.from_qvector(F, q))
    Q = QuadTriple.from_qvector(F, q)
    assert X == -(Q.form(0) * Q.form(2))
    assert not is_smooth_plane_quartic(X)


def test_bruin_quartic_pointwise_identity():
    F = make_ext(5)
    rng = random.Random(3)
    Q = QuadTriple.from_qvector(F, [rng.randrange(5) for _ in range(15)])
    X = bruin_quartic(Q)
    for _ in range(100):
        P = [rng.randrange(5) for _ in range(3)]
        q1, q2, q3 = (evaluate(Q.form(i), P) for i in range(3))
        assert (evaluate(X, P) == 0) == (F.mul(q1, q3) == F.mul(q2, q2))


def test_diagonal_forms_give_product_sextic():
    F = make_ext(7)
    m = [[2, 3, 5], [1, 4, 6], [3, 1, 2]]
    q = [m[0][0], 0, m[0][1], 0, 0, m[0][2], m[1][0], m[1][1], m[1][2],
         m[2][0], 0, m[2][1], 0, 0, m[2][2]]
    Z = bruin_prym_sextic(QuadTriple.from_qvector(F, q))
    prod = UniPoly(F, [1])
    for j in range(3):
        prod = prod * UniPoly(F, [m[0][j], 2 * m[1][j] % 7, m[2][j]])
    assert list(Z.d) == [F.neg(c) for c in prod.c]


def test_constant_sextic_rejected():
    F = make_ext(5)
    q = [1, 0, 2, 0, 0, 3] + [0, 0, 0] + [0] * 6
    with pytest.raises(ValueError):
        bruin_prym_sextic(QuadTriple.from_qvector(F, q))


# -- Kummer surface ---------------------------------------------------------------

def test_kummer_of_x6_minus_1():
    F = make_ext(7)
    K = kummer_surface(Genus2Curve.make(F, [F.neg(1), 0, 0, 0, 0, 0, 1]))
    expect = parse_mpoly(F, "X2^2*X4^2 - 4*X1*X3*X4^2 + 4*X1^3*X4 - 4*X3^3*X4 + 4*X1^2*X3^2"
                            " - 8*X1*X2^2*X3 + 4*X2^4", X4)
    assert K.kappa == expect


def test_x4_squared_coefficient_is_constant():
    F = make_ext(5)
    rng = random.Random(2)
    want = parse_mpoly(F, "X2^2 - 4*X1*X3", X4)
    for _ in range(10):
        K = kummer_surface(random_curve(F, rng))
        k2 = MPoly(F, 4, {k: c for k, c in K.kappa.terms.items() if k & 0xFF == 2})
        assert k2 == want * parse_mpoly(F, "X4^2", X4)


@pytest.mark.parametrize("p,k", [(5, 1), (3, 2), (7, 1)])
def test_phi_lands_on_kummer(p, k):
    F = make_ext(p, k)
    rng = random.Random(p)
    for _ in range(3):
        Z = random_curve(F, rng)
        K = kummer_surface(Z)
        L = make_ext(p, 2 * k)
        emb = embedding(F, L)
        kap = MPoly(L, 4, {t: emb(c) for t, c in K.kappa.terms.items()})
        n = 0
        while n < 200:
            p1, p2 = random_point(Z, L, rng), random_point(Z, L, rng)
            if p1[0] == p2[0]:
                continue
            P = kummer_phi(Z, p1, p2, L)
            assert evaluate(kap, P) == 0
            assert kummer_phi(Z, p2, p1, L) == P
            neg = lambda q: (q[0], L.neg(q[1]))
            assert kummer_phi(Z, neg(p1), neg(p2), L) == P
            n += 1


def test_phi_rejects_bad_input():
    F = make_ext(5)
    Z = Genus2Curve.make(F, [4, 0, 0, 0, 0, 0, 1])
    with pytest.raises(ValueError):
        kummer_phi(Z, (1, 0), (1, 0))
    with pytest.raises(ValueError):
        kummer_phi(Z, (0, 1), (1, 0))


# -- plane sections ----------------------------------------------------------------

def test_section_substitution_identity():
    F = make_ext(7)
    rng = random.Random(1)
    K = kummer_surface(random_curve(F, rng))
    V = Plane(F, 2, 5, 1, 1)
    S = plane_section(K, V)
    for _ in range(30):
        P = [rng.randrange(7) for _ in range(3)]
        x4 = F.neg(sum(c * x for c, x in zip((2, 5, 1), P)) % 7)
        assert evaluate(S.ternary, P) == evaluate(K.kappa, P + [x4])
    assert not S.through_node


def test_plane_through_node_flagged():
    F = make_ext(5)
    K = kummer_surface(Genus2Curve.make(F, [4, 0, 0, 0, 0, 0, 1]))
    assert plane_section(K, Plane(F, 1, 2, 3, 0)).through_node


def test_z_alpha_section_202_smooth_for_both_roots():
    F3, F9 = make_ext(3), make_ext(3, 2)
    for al in roots_in_ext(UniPoly(F3, [2, 2, 1]), F9):
        S = plane_section(kummer_surface(family_z_alpha(F9, al)), Plane(F9, 2, 0, 2, 1))
        assert is_smooth_plane_quartic(S.ternary)


# -- smoothness -------------------------------------------------------------------

def test_fermat_quartic_smooth():
    F = make_ext(5)
    assert is_smooth_plane_quartic(parse_mpoly(F, "u^4 + v^4 + w^4", UVW))


def test_double_conic_singular():
    F = make_ext(5)
    c = parse_mpoly(F, "u^2 + v*w", UVW)
    assert not is_smooth_plane_quartic(c * c)


def test_row_3_0_quartic_smooth():
    F = make_ext(3)
    assert is_smooth_plane_quartic(bruin_quartic(QuadTriple.from_qvector(F, ROW_3_0)))


def test_smoothness_requires_quartic():
    F = make_ext(5)
    with pytest.raises(ValueError):
        is_smooth_plane_quartic(parse_mpoly(F, "u^3 + v^3 + w^3", UVW))


def singular_somewhere(X, p, max_k):
    return any(singular_points_bruteforce(X, make_ext(p, j)) for j in range(1, max_k + 1))


def with_node_at_origin(F, rng):
    # no terms of w-degree 4 or 3: the point (0:0:1) is singular
    out = {}
    for a in range(5):
        for b in range(5 - a):
            if a + b >= 2:
                out[pack((a, b, 4 - a - b))] = F.random(rng)
    return MPoly(F, 3, out)


def test_smoothness_agrees_with_brute_force_over_f3():
    F = make_ext(3)
    rng = random.Random(7)
    seen = {True: 0, False: 0}
    for i in range(60):
        X = rand_ternary_quartic(F, rng, 8) if i % 3 else with_node_at_origin(F, rng)
        if i % 3 == 0:
            X = substitute(X, random_change(F, rng))
        if X.is_zero() or X.total_degree() != 4:
            continue
        smooth = is_smooth_plane_quartic(X)
        assert smooth == (not singular_somewhere(X, 3, 4))
        seen[smooth] += 1
    assert seen[True] > 5 and seen[False] > 5


def test_smoothness_agrees_with_brute_force_over_f5():
    F = make_ext(5)
    rng = random.Random(8)
    for i in range(25):
        X = rand_ternary_quartic(F, rng, 9) if i % 2 else with_node_at_origin(F, rng)
        if i % 2 == 0:
            X = substitute(X, random_change(F, rng))
        if X.is_zero() or X.total_degree() != 4:
            continue
        assert is_smooth_plane_quartic(X) == (not singular_somewhere(X, 5, 2))


@pytest.mark.parametrize("which", ["fermat", "row30", "conic2", "node"])
def test_smoothness_invariant_under_coordinate_change(which):
    F = make_ext(3) if which in ("row30", "node") else make_ext(5)
    rng = random.Random(len(which))
    X = {
        "fermat": lambda: parse_mpoly(F, "u^4 + v^4 + w^4", UVW),
        "row30": lambda: bruin_quartic(QuadTriple.from_qvector(F, ROW_3_0)),
        "conic2": lambda: parse_mpoly(F, "u^2 + v*w", UVW) ** 2,
        "node": lambda: with_node_at_origin(F, random.Random(0)),
    }[which]()
    base = is_smooth_plane_quartic(X)
    for _ in range(50):
        assert is_smooth_plane_quartic(substitute(X, random_change(F, rng))) == base


# -- families -----------------------------------------------------------------------

def test_z_alpha_rejects_excluded_values():
    F = make_ext(3, 2)
    for al in (0, 1, F.neg(1)):
        with pytest.raises(ValueError):
            family_z_alpha(F, al)
    with pytest.raises(ValueError):
        family_z_alpha(make_ext(5), 2)


def test_z_alpha_conjugate_roots_give_conjugate_curves():
    F3, F9 = make_ext(3), make_ext(3, 2)
    a, b = roots_in_ext(UniPoly(F3, [2, 2, 1]), F9)
    assert [F9.frob(c) for c in family_z_alpha(F9, a).d] == list(family_z_alpha(F9, b).d)
    assert family_z_alpha(F9, a).squarefree


def test_z_alpha_squarefree_off_prime_field():
    F9 = make_ext(3, 2)
    for al in F9.elements():
        if not F9.in_prime_field(al):
            assert family_z_alpha(F9, al).squarefree


def test_z_tu_rank_one_off_diagonal():
    F = make_ext(3, 2)
    for t in F.elements():
        for u in F.elements():
            if t != u and t != F.neg(u):
                assert curve_p_rank(family_z_tu(F, t, u)) == 1
    with pytest.raises(ValueError):
        family_z_tu(F, 2, 2)


@pytest.mark.parametrize("t,u,plane,f", [(1, 0, (0, 2, 1, 1), 1), (0, 1, (2, 2, 0, 1), 0)])
def test_z_tu_sections(t, u, plane, f):
    F = make_ext(3)
    r = analyze_section(kummer_surface(family_z_tu(F, t, u)), Plane(F, *plane), check_smooth=True)
    assert r.smooth and p_rank(r.matrix, 3) == f


def test_simple_family_expansion():
    F = make_ext(7)
    A0, A, B, C = 2, 3, 5, 6
    D = UniPoly(F, [0, F.neg(1), 0, 1]) * UniPoly(F, [C, B, A, A0])
    assert simple_z_coeffs(F, A0, A, B, C) == D.c
    with pytest.raises(ValueError):
        family_simple_z(F, 0, 1, 1, 1)


def test_simple_family_rank_zero_criterion():
    F = make_ext(3, 2)
    rng = random.Random(4)
    hits = 0
    for _ in range(300):
        A0, C = F.random(rng, True), F.random(rng, True)
        A, B = F.random(rng), F.random(rng)
        Z = family_simple_z(F, A0, A, B, C)
        c1 = F.sub(F.pow(B, 4), F.mul(A, F.pow(C, 3))) == 0
        c2 = F.sub(F.pow(B, 3), F.mul(F.mul(C, C), F.sub(B, A0))) == 0
        zero = curve_p_rank(Z) == 0
        assert zero == (c1 and c2)
        hits += zero
    assert hits > 0


def test_golden_ratio_example_both_roots():
    F3, F9 = make_ext(3), make_ext(3, 2)
    for t in roots_in_ext(UniPoly(F3, [2, 2, 1]), F9):
        Z = family_simple_z(F9, 1, 0, 1, F9.mul(2, t))
        r = analyze_section(kummer_surface(Z), Plane(F9, 0, 1, 1, 1), check_smooth=True)
        assert curve_p_rank(Z) == 1 and p_rank(r.matrix, 3) == 1 and r.smooth


@given(st.integers(0, 10 ** 6))
def test_proportional_detects_scalars(seed):
    F = make_ext(7)
    rng = random.Random(seed)
    f = rand_ternary_quartic(F, rng)
    lam = F.random(rng, True)
    assert proportional(f.scale(lam), f) == (lam if f.terms else 1)
