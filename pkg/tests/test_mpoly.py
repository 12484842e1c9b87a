import random

import pytest
from hypothesis import given, strategies as st

from prymrank.gf import make_ext
from prymrank.mpoly import (
    MPoly, coeff, evaluate, format_mpoly, mp_pow, pack, parse_expr, parse_mpoly, partial,
    resultant_wrt, substitute, to_unipoly, unpack,
)
from prymrank.prym import kummer_surface
from prymrank.hasse_witt import Genus2Curve

UV = ["u", "v"]
X4 = ["X1", "X2", "X3", "X4"]


def rand_poly(F, nvars, deg, terms, rng, homogeneous=False):
    out = {}
    for _ in range(terms):
        if homogeneous:
            cuts = sorted(rng.randint(0, deg) for _ in range(nvars - 1))
            e = [b - a for a, b in zip([0] + cuts, cuts + [deg])]
        else:
            e = [rng.randint(0, deg) for _ in range(nvars)]
        out[pack(e)] = F.random(rng, True)
    return MPoly(F, nvars, out)


def test_pack_roundtrip_and_order():
    e = (3, 0, 7, 1)
    assert unpack(pack(e), 4) == e
    # variable 0 is most significant
    assert pack((1, 0)) > pack((0, 200))


def test_binomial_fourth_power_mod5():
    F = make_ext(5)
    f = mp_pow(parse_mpoly(F, "u + v", UV), 4)
    assert [coeff(f, (4 - i, i)) for i in range(5)] == [1, 4, 1, 4, 1]


def test_zero_power_is_one():
    F = make_ext(7)
    f = parse_mpoly(F, "u^2 + 3*v", UV)
    assert mp_pow(f, 0) == MPoly.const(F, 2, 1)


def test_cube_of_sum_mod7():
    F = make_ext(7)
    f = mp_pow(parse_mpoly(F, "u + v", UV), 3)
    assert [coeff(f, (3 - i, i)) for i in range(4)] == [1, 3, 3, 1]
    assert coeff(f, (2, 2)) == 0


def test_kummer_square_degree_profile():
    F = make_ext(3)
    Z = Genus2Curve.make(F, [F.neg(1), 0, 0, 0, 0, 0, 1])
    k2 = mp_pow(kummer_surface(Z).kappa, 2)
    assert k2.is_homogeneous() and k2.total_degree() == 8
    assert k2.degree_in(3) == 2 * 3 - 2


@pytest.mark.parametrize("e", range(9))
def test_binary_and_iterated_powers_agree(e):
    F = make_ext(3, 2)
    rng = random.Random(e)
    f = rand_poly(F, 3, 3, 5, rng)
    assert mp_pow(f, e, "binary") == mp_pow(f, e, "iterated")


def test_partial_derivative_examples():
    F = make_ext(5)
    assert partial(parse_mpoly(F, "u^5", UV), 0).is_zero()
    assert partial(parse_mpoly(F, "u^2*v", UV), 0) == parse_mpoly(F, "2*u*v", UV)


def test_euler_relation_for_quartics():
    F = make_ext(5)
    rng = random.Random(11)
    names = ["u", "v", "w"]
    for _ in range(20):
        f = rand_poly(F, 3, 4, 8, rng, homogeneous=True)
        lhs = MPoly.zero(F, 3)
        for i in range(3):
            lhs = lhs + MPoly.var(F, 3, i) * partial(f, i)
        assert lhs == f.scale(4), format_mpoly(f, names)


def test_resultant_of_linear_forms():
    F = make_ext(5)
    f, g = parse_mpoly(F, "x - y", ["x", "y"]), parse_mpoly(F, "x + y", ["x", "y"])
    # descending-power Sylvester convention; swapping arguments flips the sign
    assert resultant_wrt(f, g, 1) == parse_mpoly(F, "-2*x", ["x", "y"])
    assert resultant_wrt(g, f, 1) == parse_mpoly(F, "2*x", ["x", "y"])


def test_resultant_with_self_vanishes():
    F = make_ext(5)
    f = parse_mpoly(F, "u^2*v + w^3 + u*v*w", ["u", "v", "w"])
    assert resultant_wrt(f, f, 2).is_zero()


def test_fermat_partials_resultant_nonzero():
    F = make_ext(5)
    f = parse_mpoly(F, "u^4 + v^4 + w^4", ["u", "v", "w"])
    fw = partial(f, 2)
    r = resultant_wrt(partial(f, 0) + fw, partial(f, 1) + fw, 2)
    assert not r.is_zero() and r.is_homogeneous()


def test_resultant_vanishes_at_common_zero():
    F = make_ext(7)
    rng = random.Random(5)
    names = ["x", "y"]
    for _ in range(30):
        x0, y0 = rng.randrange(7), rng.randrange(7)
        f = rand_poly(F, 2, 3, 4, rng)
        g = rand_poly(F, 2, 3, 4, rng)
        # force a common zero at (x0, y0)
        f = f - MPoly.const(F, 2, evaluate(f, (x0, y0)))
        g = g - MPoly.const(F, 2, evaluate(g, (x0, y0)))
        if f.degree_in(1) < 1 or g.degree_in(1) < 1:
            continue
        r = resultant_wrt(f, g, 1)
        assert evaluate(r, (x0, 0)) == 0, (format_mpoly(f, names), format_mpoly(g, names))


@given(st.integers(0, 10_000), st.integers(0, 6))
def test_evaluation_is_a_ring_map(seed, e):
    F = make_ext(3, 2)
    rng = random.Random(seed)
    f = rand_poly(F, 3, 3, 4, rng)
    g = rand_poly(F, 3, 3, 4, rng)
    P = [F.random(rng) for _ in range(3)]
    assert evaluate(f * g, P) == F.mul(evaluate(f, P), evaluate(g, P))
    assert evaluate(mp_pow(f, e), P) == F.pow(evaluate(f, P), e)
    assert evaluate(f + g, P) == F.add(evaluate(f, P), evaluate(g, P))


def test_products_of_homogeneous_stay_homogeneous():
    F = make_ext(5)
    Z = Genus2Curve.make(F, [1, 2, 0, 3, 0, 1, 1])
    kappa = kummer_surface(Z).kappa
    v = parse_mpoly(F, "2*X1 + X2 + 3*X3 + X4", X4)
    prod = kappa * v
    assert prod.is_homogeneous() and prod.total_degree() == 5


def test_substitute_matches_evaluation():
    F = make_ext(7)
    rng = random.Random(8)
    f = rand_poly(F, 3, 3, 6, rng)
    images = [rand_poly(F, 2, 2, 3, rng) for _ in range(3)]
    g = substitute(f, images)
    for _ in range(20):
        P = [rng.randrange(7) for _ in range(2)]
        assert evaluate(g, P) == evaluate(f, [evaluate(h, P) for h in images])


def test_to_unipoly_collects_variable():
    F = make_ext(5)
    f = parse_mpoly(F, "3*u^2 + u + 4", UV)
    assert to_unipoly(f, 0).c == [4, 1, 3]


# -- text forms ------------------------------------------------------------

def test_format_parse_roundtrip():
    F = make_ext(3, 2)
    rng = random.Random(4)
    for _ in range(30):
        f = rand_poly(F, 4, 4, 6, rng)
        assert parse_mpoly(F, format_mpoly(f, X4), X4) == f
        assert parse_expr(F, format_mpoly(f, X4), X4) == f


def test_expression_parser_features():
    F = make_ext(5)
    names = ["a", "b", "c", "u"]
    assert parse_expr(F, "-u^3c + 2(a - b)", names) == \
        parse_mpoly(F, "4*c*u^3 + 2*a + 3*b", names)
    assert parse_expr(F, "(a+b)^2", names) == parse_expr(F, "a^2 + 2ab + b^2", names)
    assert parse_expr(F, "a − b", names) == parse_expr(F, "a - b", names)


def test_parser_rejects_unknown_names():
    F = make_ext(5)
    with pytest.raises(ValueError):
        parse_expr(F, "u + q", UV)


def test_graded_lex_format_order():
    F = make_ext(7)
    f = parse_mpoly(F, "1 + v + u^2 + u*v^3", UV)
    assert format_mpoly(f, UV) == "u*v^3 + u^2 + v + 1"
