"""Quadratic-form double covers, the Kummer surface, plane sections, smoothness."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .gf import FieldCtx, UniPoly, embedding, factor_univar, make_ext, roots_in_ext
from .hasse_witt import Genus2Curve
from .mpoly import (MPoly, linear_form, monomial, pack, partial,
                    resultant_wrt, substitute, to_unipoly, unpack)

# [q111,q112,q122,q113,q123,q133, q211,q222,q233, q311,q312,q322,q313,q323,q333]
Q_LAYOUT = {
    0: [(0, 0), (0, 1), (1, 1), (0, 2), (1, 2), (2, 2)],
    1: [(0, 0), (1, 1), (2, 2)],
    2: [(0, 0), (0, 1), (1, 1), (0, 2), (1, 2), (2, 2)],
}


@dataclass(frozen=True)
class QuadTriple:
    """Symmetric Gram matrices M1, M2, M3 with (u,v,w) M_i (u,v,w)^T = Q_i."""

    ctx: FieldCtx
    M: tuple[tuple[tuple[int, ...], ...], ...]

    @classmethod
    def from_qvector(cls, ctx: FieldCtx, q: Sequence[int]) -> "QuadTriple":
        if len(q) != 15:
            raise ValueError("expected 15 coefficients")
        vals = [ctx.from_int(x) if ctx.k == 1 else x for x in q]
        half = ctx.inv(2)
        it = iter(vals)
        mats = []
        for idx in range(3):
            M = [[0] * 3 for _ in range(3)]
            for (i, j) in Q_LAYOUT[idx]:
                c = next(it)
                if i == j:
                    M[i][i] = c
                else:
                    M[i][j] = M[j][i] = ctx.mul(c, half)
            mats.append(tuple(tuple(r) for r in M))
        return cls(ctx, tuple(mats))

    def qvector(self) -> list[int]:
        F = self.ctx
        out = []
        for idx in range(3):
            for (i, j) in Q_LAYOUT[idx]:
                c = self.M[idx][i][j]
                out.append(c if i == j else F.add(c, c))
        return out

    def form(self, i: int) -> MPoly:
        F = self.ctx
        M = self.M[i]
        terms = {}
        for a in range(3):
            for b in range(a, 3):
                e = [0, 0, 0]
                e[a] += 1
                e[b] += 1
                c = M[a][b] if a == b else F.add(M[a][b], M[b][a])
                if c:
                    terms[pack(e)] = c
        return MPoly(F, 3, terms)


def bruin_quartic(Q: QuadTriple) -> MPoly:
    """F = Q2^2 - Q1 Q3 in u, v, w."""
    Q1, Q2, Q3 = Q.form(0), Q.form(1), Q.form(2)
    return Q2 * Q2 - Q1 * Q3


def _det3_uni(m: list[list[UniPoly]]) -> UniPoly:
    a, b, c = m[0]
    d, e, f = m[1]
    g, h, i = m[2]
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def bruin_prym_sextic(Q: QuadTriple) -> Genus2Curve:
    """z^2 = D(x) = -det(M1 + 2x M2 + x^2 M3)."""
    F = Q.ctx
    M1, M2, M3 = Q.M
    two = F.from_int(2)
    ent = [[UniPoly(F, [M1[i][j], F.mul(two, M2[i][j]), M3[i][j]]) for j in range(3)]
           for i in range(3)]
    D = -_det3_uni(ent)
    if D.is_zero():
        raise ValueError("D vanishes identically")
    if D.deg < 1:
        raise ValueError("D is constant")
    return Genus2Curve.make(F, D.c)


# ---------------------------------------------------------------------------
# Kummer surface
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class KummerSurface:
    source: Genus2Curve
    kappa: MPoly


def kummer_surface(Z: Genus2Curve) -> KummerSurface:
    F = Z.ctx
    d0, d1, d2, d3, d4, d5, d6 = Z.d
    m, a, s, n = F.mul, F.add, F.sub, F.from_int

    def lin(*pairs):
        acc = 0
        for c, x in pairs:
            acc = a(acc, m(n(c), x))
        return acc

    terms: list[tuple[int, tuple[int, int, int, int]]] = [
        # K2 X4^2
        (1, (0, 2, 0, 2)), (n(-4), (1, 0, 1, 2)),
        # K1 X4
        (lin((-4, d0)), (3, 0, 0, 1)), (lin((-2, d1)), (2, 1, 0, 1)),
        (lin((-4, d2)), (2, 0, 1, 1)), (lin((-2, d3)), (1, 1, 1, 1)),
        (lin((-4, d4)), (1, 0, 2, 1)), (lin((-2, d5)), (0, 1, 2, 1)),
        (lin((-4, d6)), (0, 0, 3, 1)),
        # K0
        (s(m(d1, d1), m(n(4), m(d0, d2))), (4, 0, 0, 0)),
        (m(n(-4), m(d0, d3)), (3, 1, 0, 0)),
        (m(n(-2), m(d1, d3)), (3, 0, 1, 0)),
        (m(n(-4), m(d0, d4)), (2, 2, 0, 0)),
        (m(n(4), s(m(d0, d5), m(d1, d4))), (2, 1, 1, 0)),
        (lin((1, m(d3, d3)), (2, m(d1, d5)), (-4, m(d2, d4)), (-4, m(d0, d6))), (2, 0, 2, 0)),
        (m(n(-4), m(d0, d5)), (1, 3, 0, 0)),
        (m(n(4), s(m(n(2), m(d0, d6)), m(d1, d5))), (1, 2, 1, 0)),
        (m(n(4), s(m(d1, d6), m(d2, d5))), (1, 1, 2, 0)),
        (m(n(-2), m(d3, d5)), (1, 0, 3, 0)),
        (m(n(-4), m(d0, d6)), (0, 4, 0, 0)),
        (m(n(-4), m(d1, d6)), (0, 3, 1, 0)),
        (m(n(-4), m(d2, d6)), (0, 2, 2, 0)),
        (m(n(-4), m(d3, d6)), (0, 1, 3, 0)),
        (s(m(d5, d5), m(n(4), m(d4, d6))), (0, 0, 4, 0)),
    ]
    acc: dict[int, int] = {}
    for c, e in terms:
        k = pack(e)
        acc[k] = a(acc.get(k, 0), c)
    return KummerSurface(Z, MPoly(F, 4, acc))


def kummer_phi(Z: Genus2Curve, p1: tuple[int, int], p2: tuple[int, int],
               ctx: FieldCtx | None = None) -> tuple[int, int, int, int]:
    """[1 : x1+x2 : x1 x2 : beta0] for the divisor class of p1 + p2 - Z_inf.

    Points may lie over an extension ctx of the curve's field."""
    F = ctx or Z.ctx
    emb = embedding(Z.ctx, F)
    D = UniPoly(F, [emb(c) for c in Z.d])
    (x1, z1), (x2, z2) = p1, p2
    for x, z in (p1, p2):
        if F.mul(z, z) != D(x):
            raise ValueError("point not on the curve")
    if x1 == x2:
        raise ValueError("x1 = x2 is a pole of the formula")
    d = [emb(c) for c in Z.d]
    s = F.add(x1, x2)
    pr = F.mul(x1, x2)
    two = F.from_int(2)
    pr2 = F.mul(pr, pr)
    pr3 = F.mul(pr2, pr)
    terms = [F.mul(two, d[0]), F.mul(d[1], s), F.mul(F.mul(two, d[2]), pr),
             F.mul(F.mul(d[3], s), pr), F.mul(F.mul(two, d[4]), pr2),
             F.mul(F.mul(d[5], s), pr2), F.mul(F.mul(two, d[6]), pr3)]
    F0 = 0
    for t in terms:
        F0 = F.add(F0, t)
    num = F.sub(F0, F.mul(two, F.mul(z1, z2)))
    diff = F.sub(x1, x2)
    beta0 = F.div(num, F.mul(diff, diff))
    return (1, s, pr, beta0)


# ---------------------------------------------------------------------------
# planes and sections
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Plane:
    ctx: FieldCtx
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if not any((self.a, self.b, self.c, self.d)):
            raise ValueError("plane coefficients are all zero")

    @property
    def coeffs(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def normalized(self) -> "Plane":
        if self.d == 0:
            return self
        F = self.ctx
        inv = F.inv(self.d)
        return Plane(F, F.mul(self.a, inv), F.mul(self.b, inv), F.mul(self.c, inv), 1)

    def form(self) -> MPoly:
        return linear_form(self.ctx, self.coeffs)

    def contains_node(self) -> bool:
        return self.d == 0


@dataclass(frozen=True)
class PlaneSection:
    v: MPoly
    h: MPoly
    ternary: MPoly
    eliminated: int
    through_node: bool


def plane_section(K: KummerSurface, V: Plane) -> PlaneSection:
    """Return (v, kappa) for the space model and the ternary quartic obtained
    by solving v = 0 for the last variable with nonzero coefficient."""
    return cut_by_plane(K.kappa, V)


def cut_by_plane(h: MPoly, V: Plane) -> PlaneSection:
    """Section of the quartic surface h = 0 by the plane V (h is embedded into
    the plane's field when needed)."""
    F = V.ctx
    if h.ctx != F:
        emb = embedding(h.ctx, F)
        h = MPoly(F, 4, {k: emb(c) for k, c in h.terms.items()})
    Vn = V.normalized()
    co = Vn.coeffs
    t = max(i for i in range(4) if co[i])
    inv = F.inv(co[t])
    keep = [i for i in range(4) if i != t]
    images = []
    for i in range(4):
        if i == t:
            images.append(linear_form(F, [F.neg(F.mul(co[j], inv)) for j in keep]))
        else:
            e = [0, 0, 0]
            e[keep.index(i)] = 1
            images.append(monomial(F, e))
    tern = substitute(h, images)
    return PlaneSection(Vn.form(), h, tern, t, V.contains_node())


# ---------------------------------------------------------------------------
# smoothness of plane quartics
# ---------------------------------------------------------------------------

def dehomogenize(G: MPoly, var: int, value: int) -> MPoly:
    """Set variable `var` to a constant; the result lives in the remaining
    variables (order kept)."""
    F = G.ctx
    n = G.nvars
    out: dict[int, int] = {}
    powc = {}
    for k, c in G.terms.items():
        e = unpack(k, n)
        ev = e[var]
        if ev not in powc:
            powc[ev] = F.pow(value, ev)
        w = powc[ev]
        if not w:
            continue
        kk = pack([e[i] for i in range(n) if i != var])
        out[kk] = F.add(out.get(kk, 0), F.mul(c, w))
    return MPoly(F, n - 1, {k: c for k, c in out.items() if c})


def _specialize_first(g: MPoly, u0: int, L: FieldCtx) -> UniPoly:
    """g(u0, v) as a polynomial in v over L."""
    emb = embedding(g.ctx, L)
    cs: dict[int, int] = {}
    for k, c in g.terms.items():
        eu, ev = unpack(k, 2)
        cs[ev] = L.add(cs.get(ev, 0), L.mul(emb(c), L.pow(u0, eu)))
    top = max(cs, default=-1)
    return UniPoly(L, [cs.get(j, 0) for j in range(top + 1)])


def _gcd_all(polys: list[UniPoly]) -> UniPoly | None:
    nz = [f for f in polys if not f.is_zero()]
    if not nz:
        return None
    g = nz[0]
    for f in nz[1:]:
        g = g.gcd(f)
    return g.monic()


def _residue_field(h: UniPoly) -> tuple[FieldCtx, int]:
    """A field L containing a root u0 of the irreducible h; returns (L, u0)."""
    F = h.ctx
    e = h.deg
    if e == 1:
        hm = h.monic()
        return F, F.neg(hm.c[0])
    if F.k == 1:
        L = make_ext(F.p, e, tuple(h.monic().c))
        return L, L.gen()
    L = make_ext(F.p, F.k * e)
    roots = roots_in_ext(h, L)
    return L, roots[0]


def _affine_chart_singular(grads: list[MPoly], seed: int) -> bool:
    """Do the partials, dehomogenized at w = 1, have a common zero?

    A pairwise resultant vanishing identically means two partials share a
    curve component, which meets the third partial somewhere in P^2."""
    gs = [g for g in grads if not g.is_zero()]
    if any(g.total_degree() == 0 for g in gs):
        return False
    if len(gs) <= 1:
        return True
    res: list[UniPoly] = []
    for x in range(len(gs)):
        for y in range(x + 1, len(gs)):
            f, g = gs[x], gs[y]
            if f.degree_in(1) == 0 and g.degree_in(1) == 0:
                R = to_unipoly(f, 0).gcd(to_unipoly(g, 0))
            else:
                R = to_unipoly(resultant_wrt(f, g, 1), 0)
            if R.is_zero():
                return True
            res.append(R)
    U = _gcd_all(res)
    if U.deg <= 0:
        return False
    _, facs = factor_univar(U, seed)
    for h, _m in facs:
        L, u0 = _residue_field(h)
        G = _gcd_all([_specialize_first(g, u0, L) for g in gs])
        if G is None or G.deg >= 1:
            return True
    return False


def is_smooth_plane_quartic(Fq: MPoly, seed: int = 0) -> bool:
    """No common zero of the three partials over the algebraic closure.

    Affine chart w = 1 by resultants in v, then the line w = 0 directly."""
    if Fq.nvars != 3 or not Fq.is_homogeneous() or Fq.total_degree() != 4:
        raise ValueError("expected a homogeneous quartic in three variables")
    grads = [partial(Fq, i) for i in range(3)]
    if all(g.is_zero() for g in grads):
        return False
    if _affine_chart_singular([dehomogenize(g, 2, 1) for g in grads], seed):
        return False
    # points (u : 1 : 0), then (1 : 0 : 0)
    line = [to_unipoly(dehomogenize(dehomogenize(g, 2, 0), 1, 1), 0) for g in grads]
    G = _gcd_all(line)
    if G is None or G.deg >= 1:
        return False
    return any(g.terms.get(pack((3, 0, 0)), 0) for g in grads)


def singular_points_bruteforce(Fq: MPoly, L: FieldCtx) -> list[tuple[int, int, int]]:
    """All singular points of the quartic with coordinates in L (normalized)."""
    emb = embedding(Fq.ctx, L)
    grads = [partial(Fq, i) for i in range(3)]
    grads = [MPoly(L, 3, {k: emb(c) for k, c in g.terms.items()}) for g in grads]
    pts = []
    for u, v in product(L.elements(), repeat=2):
        pts.append((u, v, 1))
    for u in L.elements():
        pts.append((u, 1, 0))
    pts.append((1, 0, 0))
    return [P for P in pts if all(g(P) == 0 for g in grads)]


# ---------------------------------------------------------------------------
# named families
# ---------------------------------------------------------------------------

def family_z_alpha(ctx: FieldCtx, alpha: int) -> Genus2Curve:
    """z^2 = A(x) B(x) over a field of characteristic 3."""
    F = ctx
    if F.p != 3:
        raise ValueError("this family is defined in characteristic 3")
    if alpha in (0, 1, F.neg(1)):
        raise ValueError("alpha must avoid 0, 1, -1")
    a1 = F.add(alpha, 1)
    A = UniPoly(F, [a1, alpha, F.neg(alpha), 1])
    B = (UniPoly(F, [F.neg(alpha), 1]) * UniPoly(F, [F.neg(a1), 1])
         * UniPoly(F, [a1, alpha]))
    return Genus2Curve.make(F, (A * B).c)


def family_z_tu(ctx: FieldCtx, t: int, u: int) -> Genus2Curve:
    """x^6 + t x^5 + u x^4 + x^3 + t x^2 + u x + 1 (characteristic 3)."""
    if ctx.p != 3:
        raise ValueError("this family is defined in characteristic 3")
    if t == u:
        raise ValueError("t = u gives a singular curve")
    return Genus2Curve.make(ctx, [1, u, t, 1, u, t, 1])


def family_simple_z(ctx: FieldCtx, A0: int, A: int, B: int, C: int) -> Genus2Curve:
    """(x^3 - x)(A0 x^3 + A x^2 + B x + C)."""
    if A0 == 0 or C == 0:
        raise ValueError("A0 and C must be nonzero")
    F = ctx
    return Genus2Curve.make(F, simple_z_coeffs(F, A0, A, B, C))


def simple_z_coeffs(F: FieldCtx, A0: int, A: int, B: int, C: int) -> list[int]:
    return [0, F.neg(C), F.neg(B), F.sub(C, A), F.sub(B, A0), A, A0]


# ---------------------------------------------------------------------------
# comparing equations
# ---------------------------------------------------------------------------

def proportional(f: MPoly, g: MPoly) -> int | None:
    """lambda with f = lambda * g, or None."""
    if f.ctx != g.ctx or f.nvars != g.nvars:
        raise ValueError("different rings")
    if set(f.terms) != set(g.terms):
        return None
    if not f.terms:
        return 1
    F = f.ctx
    k0 = next(iter(f.terms))
    lam = F.div(f.terms[k0], g.terms[k0])
    if all(f.terms[k] == F.mul(lam, g.terms[k]) for k in f.terms):
        return lam
    return None


def sextic_from_printed(printed: MPoly) -> UniPoly:
    """printed = c z^2 + P(x) in variables (x, z)  ->  D = -P / c."""
    F = printed.ctx
    cz = printed.terms.get(pack((0, 2)), 0)
    if not cz:
        raise ValueError("no z^2 term")
    rest = {}
    for k, c in printed.terms.items():
        ex, ez = unpack(k, 2)
        if ez == 0:
            rest[ex] = c
        elif (ex, ez) != (0, 2):
            raise ValueError("unexpected mixed or odd z term")
    top = max(rest, default=0)
    inv = F.neg(F.inv(cz))
    return UniPoly(F, [F.mul(rest.get(j, 0), inv) for j in range(top + 1)])
