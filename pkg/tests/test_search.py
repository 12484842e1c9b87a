import pytest

from prymrank.gf import make_ext
from prymrank.hasse_witt import Genus2Curve
from prymrank.kummer_count import zeta_coeffs
from prymrank.prym import QuadTriple, bruin_prym_sextic
from prymrank.search import (
    SearchExhausted, SearchTarget, curve_p_rank, degree_in_b, det_h_alpha, expected_det_h,
    find_example, recompute, verify_table,
)
from prymrank.tables import ROWS, rows_for


def lpoly_p_rank(Z, p):
    # over F_p the p-rank is the degree of L(T) mod p
    z = zeta_coeffs(Z, p)
    return 2 if z.a2 % p else (1 if z.a1 % p else 0)


# -- table replay ----------------------------------------------------------------

def test_table_has_thirty_rows():
    assert len(ROWS) == 30
    assert {r.p for r in ROWS} == {3, 5, 7, 11, 13, 17, 19}


def test_p3_table_passes_completely():
    reps = verify_table(3)
    assert [r.label for r in reps] == [(3, 0), (2, 0), (1, 0), (0, 0), (1, 1), (0, 1)]
    assert all(r.passed for r in reps)
    assert reps[4].fp == reps[5].fp == 1


def test_p3_repaired_row_reports_diff():
    rep = verify_table(3)[2]
    assert rep.X_scalar is None and rep.X_scalar_repaired is not None
    assert any("replacing" in n for n in rep.notes)


def test_p5_row_0_0_f_value():
    rep = verify_table(5)[3]
    assert rep.label == (0, 0) and rep.f == 0
    assert rep.X_smooth and rep.Z_smooth and rep.equations_ok


def test_p19_rows_share_sextic():
    a, b = rows_for(19)[:2]
    assert (a.label, b.label) == ((3, 0), (2, 0))
    F = make_ext(19)
    za = bruin_prym_sextic(QuadTriple.from_qvector(F, a.q))
    zb = bruin_prym_sextic(QuadTriple.from_qvector(F, b.q))
    assert za.d == zb.d
    lam = F.inv(za.d[5])
    assert [F.mul(c, lam) * 5 % 19 for c in za.d] == [0, 10, 8, 13, 11, 5, 0]


@pytest.mark.parametrize("row", [r for r in ROWS if r.p <= 11], ids=lambda r: f"p{r.p}-{r.label}")
def test_prym_rank_agrees_with_point_count_oracle(row):
    F = make_ext(row.p)
    Z = bruin_prym_sextic(QuadTriple.from_qvector(F, row.q))
    assert curve_p_rank(Z) == lpoly_p_rank(Z, row.p)


@pytest.mark.parametrize("p", [5, 7])
def test_random_curves_rank_agrees_with_point_count_oracle(p):
    import random
    F = make_ext(p)
    rng = random.Random(p)
    n = 0
    while n < 40:
        Z = Genus2Curve.make(F, [rng.randrange(p) for _ in range(6)] + [1])
        if Z.squarefree:
            assert curve_p_rank(Z) == lpoly_p_rank(Z, p)
            n += 1


def test_verify_table_rejects_unknown_prime():
    with pytest.raises(ValueError):
        verify_table(23)


# -- example search ----------------------------------------------------------------

def test_find_example_p3_ordinary_quartic():
    t = SearchTarget(3, 3, 0, seed=0)
    rec = find_example(t)
    assert (rec.f, rec.fp, rec.X_smooth, rec.Z_smooth) == (3, 0, True, True)
    assert rec.mode == "bruin" and len(rec.data) == 15
    assert rec == find_example(t)
    assert recompute(rec) == rec


def test_find_example_p3_row_0_0():
    rec = find_example(SearchTarget(3, 0, 0, seed=1))
    assert (rec.f, rec.fp) == (0, 0)
    assert recompute(rec) == rec


def test_parallel_search_matches_serial():
    t = SearchTarget(3, 2, 1, seed=3)
    assert find_example(t, workers=1) == find_example(t, workers=3, chunk=8)


def test_sampled_q2_is_diagonal_01():
    rec = find_example(SearchTarget(5, 3, 2, seed=2))
    assert set(rec.data[6:9]) <= {0, 1}


def test_supersingular_curve_conflicts_with_ordinary_prym():
    with pytest.raises(ValueError):
        find_example(SearchTarget(5, 3, 2, curve=(4, 0, 0, 0, 0, 0, 1)))


def test_fixed_curve_plane_search():
    rec = find_example(SearchTarget(5, 3, 0, curve=(4, 0, 0, 0, 0, 0, 1)))
    assert rec.mode == "plane" and rec.data[3] == 1 and rec.f == 3
    assert recompute(rec) == rec


def test_budget_exhaustion_reported():
    with pytest.raises(SearchExhausted) as e:
        find_example(SearchTarget(3, 0, 0, budget=2))
    assert e.value.tried == 2


@pytest.mark.parametrize("f,fp", [(4, 0), (0, 3), (-1, 0)])
def test_target_ranges(f, fp):
    with pytest.raises(ValueError):
        SearchTarget(3, f, fp)


# -- degree in b -----------------------------------------------------------------

def test_degree_in_b_p5():
    r = degree_in_b(5, seed=0)
    s = r.summary()
    assert r.degree == 16
    assert s["lead"] == [4, 4] == [s["lead_expected"]] * 2
    assert s["sublead"] == s["sublead_expected"]
    assert r.diagonal_degree <= 4 * 5 - 6
    assert all(d <= 2 * 5 - 2 for d in r.mid_entry_degrees)


def test_degree_in_b_is_seeded():
    assert degree_in_b(5, seed=3).summary() == degree_in_b(5, seed=3).summary()


def test_degree_in_b_rejects_other_primes():
    with pytest.raises(ValueError):
        degree_in_b(7)


# -- p = 3 family -----------------------------------------------------------------

def test_expected_det_h_has_degree_38():
    P, facs = expected_det_h()
    assert P.deg == 38 and sum(g.deg * m for g, m in facs) == 38


def test_det_h_alpha_plane_through_node_rejected():
    with pytest.raises(ValueError):
        det_h_alpha([1, 0, 0, 0])


def test_det_h_alpha_random_plane_is_nonzero():
    r = det_h_alpha([1, 2, 0, 1])
    assert not r.poly.is_zero() and r.poly.deg <= 48
