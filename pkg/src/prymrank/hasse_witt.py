"""Hasse-Witt and Cartier-Manin matrices, Frobenius twists and p-ranks."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from .gf import FieldCtx, UniPoly, is_squarefree
from .mpoly import MPoly, coeff, mp_pow, multinomial, pack


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HWMatrix:
    ctx: FieldCtx
    entries: tuple[tuple[int, ...], ...]
    basis: str = "unspecified"

    @classmethod
    def of(cls, ctx: FieldCtx, rows: Sequence[Sequence[int]], basis: str = "unspecified") -> "HWMatrix":
        t = tuple(tuple(r) for r in rows)
        if any(len(r) != len(t) for r in t):
            raise ValueError("matrix must be square")
        return cls(ctx, t, basis)

    @property
    def n(self) -> int:
        return len(self.entries)

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def transpose(self) -> "HWMatrix":
        return HWMatrix(self.ctx, tuple(zip(*self.entries)), self.basis + "^T")

    def twist(self, i: int) -> "HWMatrix":
        return frobenius_twist(self, i)

    def __matmul__(self, o: "HWMatrix") -> "HWMatrix":
        return HWMatrix(self.ctx, tuple(tuple(r) for r in mat_mul(self.ctx, self.rows(), o.rows())),
                        self.basis)

    def same_basis_equal(self, o: "HWMatrix") -> bool:
        if self.basis != o.basis:
            raise ValueError(f"refusing to compare matrices in bases {self.basis!r} and {o.basis!r}")
        return self.entries == o.entries

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.entries for x in r)

    def rank(self) -> int:
        return mat_rank(self.ctx, self.rows())

    def det(self) -> int:
        return mat_det(self.ctx, self.rows())

    def format(self) -> list[list[str]]:
        return [[self.ctx.format(x) for x in r] for r in self.entries]


def mat_mul(F: FieldCtx, A: list[list[int]], B: list[list[int]]) -> list[list[int]]:
    n, m, l = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        row = []
        for j in range(l):
            s = 0
            for k in range(m):
                if A[i][k] and B[k][j]:
                    s = F.add(s, F.mul(A[i][k], B[k][j]))
            row.append(s)
        out.append(row)
    return out


def _echelon(F: FieldCtx, A: list[list[int]]) -> tuple[int, int]:
    """In-place elimination; returns (rank, determinant sign/product)."""
    n = len(A)
    m = len(A[0]) if n else 0
    rk = 0
    det = 1
    for c in range(m):
        piv = next((i for i in range(rk, n) if A[i][c]), None)
        if piv is None:
            det = 0
            continue
        if piv != rk:
            A[rk], A[piv] = A[piv], A[rk]
            det = F.neg(det)
        det = F.mul(det, A[rk][c])
        inv = F.inv(A[rk][c])
        for i in range(n):
            if i != rk and A[i][c]:
                f = F.mul(A[i][c], inv)
                A[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(A[i], A[rk])]
        rk += 1
    return rk, det


def mat_rank(F: FieldCtx, A: list[list[int]]) -> int:
    if not A:
        return 0
    return _echelon(F, [r[:] for r in A])[0]


def mat_det(F: FieldCtx, A: list[list[int]]) -> int:
    rk, det = _echelon(F, [r[:] for r in A])
    return det if rk == len(A) else 0


def frobenius_twist(H: HWMatrix, i: int) -> HWMatrix:
    F = H.ctx
    return HWMatrix(F, tuple(tuple(F.frob(x, i) for x in r) for r in H.entries), H.basis)


def stable_product(H: HWMatrix, g: int) -> HWMatrix:
    """H * H^(p) * ... * H^(p^{g-1})."""
    P = H
    for i in range(1, g):
        P = P @ frobenius_twist(H, i)
    return P


def p_rank(H: HWMatrix, g: int | None = None) -> int:
    g = H.n if g is None else g
    if H.n != g:
        raise ValueError("matrix size must equal the genus")
    return stable_product(H, g).rank()


# ---------------------------------------------------------------------------
# hyperelliptic curves
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Genus2Curve:
    """z^2 = D(x) with D = d0 + d1 x + ... + d6 x^6."""

    ctx: FieldCtx
    d: tuple[int, ...]
    squarefree: bool = field(default=True)

    @classmethod
    def make(cls, ctx: FieldCtx, d: Sequence[int]) -> "Genus2Curve":
        d = tuple(d) + (0,) * (7 - len(d))
        if len(d) > 7 or any(d[7:]):
            raise ValueError("D must have degree at most 6")
        D = UniPoly(ctx, d)
        sf = (not D.is_zero()) and is_squarefree(D)
        return cls(ctx, d[:7], sf)

    @property
    def D(self) -> UniPoly:
        return UniPoly(self.ctx, self.d)

    @property
    def degree(self) -> int:
        return self.D.deg

    def is_smooth(self) -> bool:
        return self.squarefree and self.degree in (5, 6)

    def format(self) -> str:
        return ",".join(self.ctx.format(x) for x in self.d) if self.ctx.k == 1 else \
            ";".join(self.ctx.format(x) for x in self.d)


def _hyper_poly(curve) -> UniPoly:
    if isinstance(curve, Genus2Curve):
        return curve.D
    if isinstance(curve, UniPoly):
        return curve
    raise TypeError("expected Genus2Curve or UniPoly")


def _check_hyper(f: UniPoly, force: bool) -> int:
    if f.ctx.p == 2:
        raise ValueError("odd characteristic required")
    if f.deg < 3:
        raise ValueError("degree too small for a hyperelliptic curve")
    g = (f.deg - 1) // 2
    if not force and not is_squarefree(f):
        raise ValueError("D is not squarefree (pass force=True to override)")
    return g


def _half_power(f: UniPoly) -> UniPoly:
    r = UniPoly(f.ctx, [1])
    for _ in range((f.ctx.p - 1) // 2):
        r = r * f
    return r


def cartier_manin_hyperelliptic(curve, force: bool = False) -> HWMatrix:
    """g x g matrix with (i, j) entry the coefficient of x^{ip-j} in f^{(p-1)/2}."""
    f = _hyper_poly(curve)
    g = _check_hyper(f, force)
    p = f.ctx.p
    h = _half_power(f)
    rows = [[h.coeff(i * p - j) for j in range(1, g + 1)] for i in range(1, g + 1)]
    return HWMatrix.of(f.ctx, rows, "cartier-manin")


def hasse_witt_hyperelliptic(curve, force: bool = False) -> HWMatrix:
    """Genus 2: [[b_{p-1}, b_{2p-1}], [b_{p-2}, b_{2p-2}]] from D^{(p-1)/2}."""
    f = _hyper_poly(curve)
    if f.deg not in (5, 6):
        raise ValueError("genus 2 requires deg D in {5, 6}")
    _check_hyper(f, force)
    p = f.ctx.p
    b = _half_power(f).coeff
    rows = [[b(p - 1), b(2 * p - 1)], [b(p - 2), b(2 * p - 2)]]
    return HWMatrix.of(f.ctx, rows, "cartier-manin^T")


# ---------------------------------------------------------------------------
# plane quartic given affinely by q(u, v)
# ---------------------------------------------------------------------------

def quartic_indices(p: int) -> list[list[tuple[int, int]]]:
    return [
        [(p - 1, p - 1), (2 * p - 1, p - 1), (p - 1, 2 * p - 1)],
        [(p - 2, p - 1), (2 * p - 2, p - 1), (p - 2, 2 * p - 1)],
        [(p - 1, p - 2), (2 * p - 1, p - 2), (p - 1, 2 * p - 2)],
    ]


def hasse_witt_quartic(q: MPoly) -> HWMatrix:
    if q.nvars != 2:
        raise ValueError("expected a polynomial in two variables u, v")
    if q.total_degree() != 4:
        raise ValueError("expected total degree 4")
    p = q.ctx.p
    qp = mp_pow(q, p - 1)
    rows = [[coeff(qp, e) for e in row] for row in quartic_indices(p)]
    return HWMatrix.of(q.ctx, rows, "quartic-affine")


# ---------------------------------------------------------------------------
# curve cut out by a plane and a quartic surface in P^3
# ---------------------------------------------------------------------------

def gamma_exponent(p: int, i: int, j: int) -> tuple[int, int, int, int]:
    """Exponent of the (vh)^{p-1} coefficient giving gamma_{i,j} (0-based)."""
    return tuple(p * (1 + (k == j)) - (1 + (k == i)) for k in range(4))


@dataclass(frozen=True)
class SectionHW:
    matrix: HWMatrix
    H0: HWMatrix
    pivot: int


class SectionCoefficients:
    """Coefficients of (v h)^{p-1} at chosen exponents without expanding the
    product: c_e = sum_m multinom(m) a^m [h^{p-1}]_{e-m} over |m| = p-1."""

    def __init__(self, h: MPoly, h_power: MPoly | None = None):
        if h.nvars != 4:
            raise ValueError("h must be a polynomial in X1..X4")
        self.h = h
        self.ctx = h.ctx
        p = h.ctx.p
        self.p = p
        self.hp = h_power if h_power is not None else mp_pow(h, p - 1)
        self.compositions = [m for m in product(range(p), repeat=4) if sum(m) == p - 1]
        self.multi = [multinomial(m) % p for m in self.compositions]

    def coefficient(self, a: Sequence[int], e: Sequence[int]) -> int:
        F = self.ctx
        pw = []
        for x in a:
            row = [1]
            for _ in range(self.p - 1):
                row.append(F.mul(row[-1], x))
            pw.append(row)
        hp = self.hp.terms
        acc = 0
        for m, mult in zip(self.compositions, self.multi):
            if not mult:
                continue
            r = tuple(ei - mi for ei, mi in zip(e, m))
            if min(r) < 0:
                continue
            c = hp.get(pack(r))
            if not c:
                continue
            t = F.mul(c, F.from_int(mult))
            for i in range(4):
                if m[i]:
                    t = F.mul(t, pw[i][m[i]])
            acc = F.add(acc, t)
        return acc


def linear_coefficients(v: MPoly) -> list[int]:
    if v.nvars != 4 or not v.is_homogeneous() or v.total_degree() != 1:
        raise ValueError("v must be a nonzero linear form in X1..X4")
    return [coeff(v, tuple(int(k == i) for k in range(4))) for i in range(4)]


def _gamma_table(p: int, get) -> list[list[int]]:
    return [[get(gamma_exponent(p, i, j)) for j in range(4)] for i in range(4)]


def hasse_witt_section(v: MPoly, h: MPoly, pivot: int | None = None, *,
                       coefficients: SectionCoefficients | None = None,
                       full_expand: bool = False) -> SectionHW:
    """Hasse-Witt matrix of the curve v = h = 0 in P^3 (v linear, h quartic).

    pivot is 0-based; by default the last index with a nonzero coefficient.
    The full_expand route multiplies out (vh)^{p-1} and is kept as an oracle.
    """
    F = v.ctx
    p = F.p
    a = linear_coefficients(v)
    if h.nvars != 4 or not h.is_homogeneous() or h.total_degree() != 4:
        raise ValueError("h must be a homogeneous quartic in X1..X4")
    if pivot is None:
        pivot = max(i for i in range(4) if a[i])
    if not a[pivot]:
        raise ValueError("pivot coefficient of v is zero")
    if full_expand:
        vh = mp_pow(v * h, p - 1)
        gam = _gamma_table(p, lambda e: coeff(vh, e))
    else:
        sc = coefficients or SectionCoefficients(h)
        gam = _gamma_table(p, lambda e: sc.coefficient(a, e))
    t = pivot
    at = a[t]
    atp1 = F.pow(at, p - 1)
    atinv = F.inv(at)
    idx = [i for i in range(4) if i != t]
    rows = []
    for i in idx:
        row = []
        for j in idx:
            x = F.sub(F.mul(atp1, gam[i][j]),
                      F.mul(F.mul(F.pow(a[j], p), atinv), gam[i][t]))
            row.append(x)
        rows.append(row)
    return SectionHW(HWMatrix.of(F, rows, f"section-pivot{t + 1}"),
                     HWMatrix.of(F, gam, "H0"), t)
