"""Point counts for genus-2 curves, their Jacobians and Kummer surfaces."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from .gf import FieldCtx, UniPoly, embedding, make_ext
from .hasse_witt import Genus2Curve
from .mpoly import MPoly, pack, unpack
from .prym import KummerSurface, Plane, is_smooth_plane_quartic, kummer_surface, plane_section

CURVE_SCAN_LIMIT = 10 ** 6
KUMMER_SCAN_LIMIT = 10 ** 3


def field_of_size(Z: Genus2Curve, q: int) -> FieldCtx:
    """F_q containing the coefficient field of Z."""
    p, k0 = Z.ctx.p, Z.ctx.k
    k = round(math.log(q, p))
    if p ** k != q:
        raise ValueError(f"{q} is not a power of {p}")
    if k % k0:
        raise ValueError(f"curve is defined over F_{Z.ctx.q}, not a subfield of F_{q}")
    return Z.ctx if k == k0 else make_ext(p, k)


def _curve_over(Z: Genus2Curve, L: FieldCtx) -> UniPoly:
    emb = embedding(Z.ctx, L)
    return UniPoly(L, [emb(c) for c in Z.d])


def count_curve(Z: Genus2Curve, q: int) -> int:
    """Points on the smooth projective model of z^2 = D(x) over F_q."""
    if q > CURVE_SCAN_LIMIT:
        raise ValueError(f"q = {q} exceeds the scan limit {CURVE_SCAN_LIMIT}")
    L = field_of_size(Z, q)
    D = _curve_over(Z, L)
    if D.deg not in (5, 6):
        raise ValueError("D must have degree 5 or 6")
    n = 0
    for x in L.elements():
        y = D(x)
        n += 1 if y == 0 else (2 if L.is_square(y) else 0)
    if D.deg == 5:
        n += 1
    else:
        n += 2 if L.is_square(D.lc()) else 0
    return n


@dataclass(frozen=True)
class ZetaData:
    q: int
    n1: int
    n2: int
    a1: int
    a2: int

    def __post_init__(self):
        if abs(self.a1) > 4 * math.sqrt(self.q):
            raise ArithmeticError("Weil bound violated")


def zeta_coeffs(Z: Genus2Curve, q: int) -> ZetaData:
    n1 = count_curve(Z, q)
    n2 = count_curve(Z, q * q)
    a1 = n1 - (q + 1)
    twice = n1 * n1 + n2 - 2 * (q + 1) * n1 + 2 * q
    if twice % 2:
        raise ArithmeticError("a2 is not an integer")
    return ZetaData(q, n1, n2, a1, twice // 2)


def jac_count(Z: Genus2Curve, q: int) -> int:
    n1 = count_curve(Z, q)
    n2 = count_curve(Z, q * q)
    return (n1 * n1 + n2) // 2 - q


def jac_count_from_zeta(z: ZetaData) -> int:
    q = z.q
    return 1 + z.a1 + z.a2 + z.a1 * q + q * q


def first_nonsquare(L: FieldCtx) -> int:
    return next(x for x in L.elements() if x and not L.is_square(x))


def quadratic_twist(Z: Genus2Curve, q: int, lam: int | None = None) -> Genus2Curve:
    """z^2 = lam^{-1} D(x) over F_q, lam the first nonsquare by code."""
    L = field_of_size(Z, q)
    lam = first_nonsquare(L) if lam is None else lam
    if lam == 0 or L.is_square(lam):
        raise ValueError("twisting element must be a nonsquare")
    inv = L.inv(lam)
    return Genus2Curve.make(L, [L.mul(inv, c) for c in _curve_over(Z, L).c])


def kummer_count_naive(K: KummerSurface, q: int) -> int:
    """Projective points of P^3(F_q) on kappa = 0, by direct scan."""
    if q > KUMMER_SCAN_LIMIT:
        raise ValueError(f"q = {q} exceeds the scan limit {KUMMER_SCAN_LIMIT}")
    L = field_of_size(K.source, q)
    emb = embedding(K.kappa.ctx, L)
    # kappa = K2 X4^2 + K1 X4 + K0 with K_i forms in X1..X3
    parts: list[list[tuple[int, tuple[int, int, int]]]] = [[], [], []]
    for k, c in K.kappa.terms.items():
        e = unpack(k, 4)
        parts[e[3]].append((emb(c), e[:3]))
    pw = {x: [1, x, L.mul(x, x), L.pow(x, 3), L.pow(x, 4)] for x in L.elements()}

    def form(terms, P):
        s = 0
        for c, (i, j, k) in terms:
            s = L.add(s, L.mul(c, L.mul(pw[P[0]][i], L.mul(pw[P[1]][j], pw[P[2]][k]))))
        return s

    elems = list(L.elements())
    heads = [(1, y, z) for y in elems for z in elems] + [(0, 1, z) for z in elems] + [(0, 0, 1)]
    n = 0
    for P in heads:
        k0, k1, k2 = (form(parts[i], P) for i in range(3))
        for x4 in elems:
            if L.add(L.add(k0, L.mul(k1, x4)), L.mul(k2, pw[x4][2])) == 0:
                n += 1
    # the point (0:0:0:1)
    if K.kappa.terms.get(pack((0, 0, 0, 4)), 0) == 0:
        n += 1
    return n


@dataclass(frozen=True)
class KummerCounts:
    q: int
    zeta: ZetaData
    jac: int
    jac_twist: int
    naive: int | None
    formula: int

    @property
    def twist_average(self) -> int:
        return (self.jac + self.jac_twist) // 2

    @property
    def three_way(self) -> bool:
        return (self.naive is None or self.naive == self.formula) and \
            (self.jac + self.jac_twist) == 2 * self.formula

    def to_dict(self) -> dict:
        z = self.zeta
        return {"q": self.q, "n1": z.n1, "n2": z.n2, "a1": z.a1, "a2": z.a2,
                "jac": self.jac, "jac_twist": self.jac_twist,
                "kummer_naive": self.naive, "kummer_twist_average": self.twist_average,
                "kummer_formula": self.formula, "three_way": self.three_way}


def kummer_counts(Z: Genus2Curve, q: int, naive: bool = True) -> KummerCounts:
    z = zeta_coeffs(Z, q)
    W = quadratic_twist(Z, q)
    K = kummer_surface(Z)
    nv = kummer_count_naive(K, q) if naive else None
    return KummerCounts(q, z, jac_count(Z, q), jac_count(W, q), nv, 1 + z.a2 + q * q)


def supersingular_congruences(z: ZetaData) -> tuple[bool, bool]:
    """(p | a2, |K(F_q)| = 1 mod q) for the given zeta data."""
    p = min(d for d in range(2, z.q + 1) if z.q % d == 0)
    return z.a2 % p == 0, (1 + z.a2 + z.q * z.q) % z.q == 1


# ---------------------------------------------------------------------------
# plane quartics cut from the Kummer surface
# ---------------------------------------------------------------------------

def count_plane_curve(F: MPoly, L: FieldCtx | None = None) -> int:
    """Projective points of a ternary form over L (default: its own field)."""
    L = L or F.ctx
    emb = embedding(F.ctx, L)
    G = MPoly(L, 3, {k: emb(c) for k, c in F.terms.items()})
    elems = list(L.elements())
    pts = [(x, y, 1) for x in elems for y in elems] + [(x, 1, 0) for x in elems] + [(1, 0, 0)]
    return sum(1 for P in pts if G(P) == 0)


@dataclass
class QssFinding:
    plane: tuple[int, int, int, int]
    points: int
    divisible: bool


def qss_scan(Z: Genus2Curve, q: int, limit: int | None = None) -> list[QssFinding]:
    """For planes aX1+bX2+cX3+X4 over F_q with smooth section X, record whether
    p divides #X(F_q).  Findings only; the scan does not settle the question."""
    L = field_of_size(Z, q)
    K = kummer_surface(Z)
    out = []
    elems = list(L.elements())
    for n, (a, b, c) in enumerate(product(elems, repeat=3)):
        if limit is not None and n >= limit:
            break
        sec = plane_section(K, Plane(L, a, b, c, 1))
        if not is_smooth_plane_quartic(sec.ternary):
            continue
        pts = count_plane_curve(sec.ternary)
        out.append(QssFinding((a, b, c, 1), pts, pts % L.p == 0))
    return out
