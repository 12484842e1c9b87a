"""Seeded example searches and symbolic verifications built on the pipelines."""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import product
from typing import Iterable, Sequence

from .gf import FieldCtx, UniPoly, embedding, factor_univar, lagrange_interpolate, make_ext, roots_in_ext
from .hasse_witt import (Genus2Curve, HWMatrix, SectionCoefficients, gamma_exponent,
                         hasse_witt_hyperelliptic, hasse_witt_quartic, hasse_witt_section, p_rank)
from .mpoly import MPoly, format_mpoly, pack, parse_expr, parse_mpoly
from .prym import (KummerSurface, Plane, QuadTriple, bruin_prym_sextic, bruin_quartic,
                   dehomogenize, family_z_alpha, is_smooth_plane_quartic, kummer_surface,
                   plane_section, proportional, sextic_from_printed)
from .tables import TableRow, rows_for

TABLE_PRIMES = (3, 5, 7, 11, 13, 17, 19)


# ---------------------------------------------------------------------------
# shared pipeline pieces
# ---------------------------------------------------------------------------

def quartic_p_rank(X: MPoly) -> int:
    """p-rank of the smooth plane quartic X(u, v, w) via its affine model."""
    return p_rank(hasse_witt_quartic(dehomogenize(X, 2, 1)), 3)


def curve_p_rank(Z: Genus2Curve) -> int:
    return p_rank(hasse_witt_hyperelliptic(Z, force=True), 2)


def _coeff_list(F: FieldCtx, cs: Sequence[int]) -> MPoly:
    return MPoly(F, 1, {pack([i]): c for i, c in enumerate(cs) if c})


def sextic_text(Z: Genus2Curve) -> str:
    return format_mpoly(_coeff_list(Z.ctx, Z.d), ["x"])


@dataclass
class SectionResult:
    plane: tuple[int, int, int, int]
    matrix: HWMatrix
    f: int
    smooth: bool


def analyze_section(K: KummerSurface, V: Plane, coefficients: SectionCoefficients | None = None,
                    check_smooth: bool = True, seed: int = 0) -> SectionResult:
    sec = plane_section(K, V)
    hw = hasse_witt_section(sec.v, sec.h, coefficients=coefficients)
    f = p_rank(hw.matrix, 3)
    smooth = is_smooth_plane_quartic(sec.ternary, seed) if check_smooth else False
    return SectionResult(V.coeffs, hw.matrix, f, smooth)


# ---------------------------------------------------------------------------
# example search
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SearchTarget:
    p: int
    f: int
    fp: int
    budget: int = 10_000
    seed: int = 0
    k: int = 1
    curve: tuple[int, ...] | None = None   # fixed Z (codes in F_{p^k}); planes are sampled

    def __post_init__(self):
        if not 0 <= self.f <= 3:
            raise ValueError("f must lie in [0, 3]")
        if not 0 <= self.fp <= 2:
            raise ValueError("f' must lie in [0, 2]")
        if self.budget < 1:
            raise ValueError("budget must be positive")


@dataclass
class ExampleRecord:
    p: int
    k: int
    mode: str
    data: list[int]          # 15 q-coefficients, or plane (a, b, c, d)
    X_poly: str
    Z_poly: str
    f: int
    fp: int
    X_smooth: bool
    Z_smooth: bool
    sample_index: int
    curve: list[int] | None = None

    def to_dict(self) -> dict:
        return asdict(self)


class SearchExhausted(Exception):
    def __init__(self, tried: int):
        super().__init__(f"no example found in {tried} samples")
        self.tried = tried


def _sample_qvector(F: FieldCtx, rng: random.Random) -> list[int]:
    u = lambda: F.random(rng)
    q1 = [u() for _ in range(6)]
    q2 = [rng.randrange(2) for _ in range(3)]
    q3 = [u() for _ in range(6)]
    return q1 + q2 + q3


def _sample_rng(seed: int, i: int) -> random.Random:
    return random.Random(f"{seed}/{i}")


def _record_from_q(F: FieldCtx, q: Sequence[int], index: int, X_smooth: bool | None = None
                   ) -> ExampleRecord | None:
    Q = QuadTriple.from_qvector(F, q)
    try:
        Z = bruin_prym_sextic(Q)
    except ValueError:
        return None
    X = bruin_quartic(Q)
    fp = curve_p_rank(Z) if Z.degree in (5, 6) else -1
    f = quartic_p_rank(X) if X.total_degree() == 4 else -1
    xs = is_smooth_plane_quartic(X) if X_smooth is None else X_smooth
    return ExampleRecord(F.p, F.k, "bruin", list(q), format_mpoly(X, ["u", "v", "w"]),
                         sextic_text(Z), f, fp, xs, Z.is_smooth(), index)


def _try_bruin(F: FieldCtx, t: SearchTarget, i: int) -> ExampleRecord | None:
    q = _sample_qvector(F, _sample_rng(t.seed, i))
    Q = QuadTriple.from_qvector(F, q)
    try:
        Z = bruin_prym_sextic(Q)
    except ValueError:
        return None
    if not Z.is_smooth() or curve_p_rank(Z) != t.fp:
        return None
    X = bruin_quartic(Q)
    if X.is_zero() or quartic_p_rank(X) != t.f:
        return None
    if not is_smooth_plane_quartic(X, t.seed):
        return None
    return _record_from_q(F, q, i, X_smooth=True)


_PLANE_CACHE: dict = {}


def _plane_setup(F: FieldCtx, curve: tuple[int, ...]):
    key = (F, curve)
    if key not in _PLANE_CACHE:
        Z = Genus2Curve.make(F, curve)
        K = kummer_surface(Z)
        _PLANE_CACHE[key] = (Z, K, SectionCoefficients(K.kappa))
    return _PLANE_CACHE[key]


def _plane_record(F: FieldCtx, curve: tuple[int, ...], plane: Sequence[int], index: int,
                  res: SectionResult | None = None) -> ExampleRecord:
    Z, K, sc = _plane_setup(F, curve)
    V = Plane(F, *plane)
    if res is None:
        res = analyze_section(K, V, sc)
    sec = plane_section(K, V)
    return ExampleRecord(F.p, F.k, "plane", list(plane),
                         format_mpoly(sec.ternary, ["X1", "X2", "X3"]), sextic_text(Z),
                         res.f, curve_p_rank(Z), res.smooth, Z.is_smooth(), index, list(curve))


def _try_plane(F: FieldCtx, t: SearchTarget, i: int) -> ExampleRecord | None:
    Z, K, sc = _plane_setup(F, t.curve)
    rng = _sample_rng(t.seed, i)
    plane = (F.random(rng), F.random(rng), F.random(rng), 1)
    V = Plane(F, *plane)
    res = analyze_section(K, V, sc, check_smooth=False)
    if res.f != t.f:
        return None
    res.smooth = is_smooth_plane_quartic(plane_section(K, V).ternary, t.seed)
    if not res.smooth:
        return None
    return _plane_record(F, t.curve, plane, i, res)


def _scan(t: SearchTarget, start: int, stop: int) -> ExampleRecord | None:
    F = make_ext(t.p, t.k)
    step = _try_plane if t.curve is not None else _try_bruin
    for i in range(start, stop):
        r = step(F, t, i)
        if r is not None:
            return r
    return None


def find_example(t: SearchTarget, workers: int = 1, chunk: int = 64) -> ExampleRecord:
    """First sample (by index) meeting the target; raises SearchExhausted.

    Samples are independent (sample i uses its own seeded generator), so the
    result does not depend on the number of workers."""
    if t.curve is not None:
        F = make_ext(t.p, t.k)
        Z = Genus2Curve.make(F, t.curve)
        if not Z.is_smooth():
            raise ValueError("fixed curve is not a smooth genus-2 curve")
        have = curve_p_rank(Z)
        if have != t.fp:
            raise ValueError(f"fixed curve has p-rank {have}, target f' = {t.fp}")
    if workers <= 1:
        r = _scan(t, 0, t.budget)
        if r is None:
            raise SearchExhausted(t.budget)
        return r
    bounds = [(s, min(s + chunk, t.budget)) for s in range(0, t.budget, chunk)]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        for b0 in range(0, len(bounds), workers):
            batch = bounds[b0:b0 + workers]
            hits = list(ex.map(_scan, [t] * len(batch), *zip(*batch)))
            for r in hits:
                if r is not None:
                    return r
    raise SearchExhausted(t.budget)


def recompute(rec: ExampleRecord) -> ExampleRecord:
    F = make_ext(rec.p, rec.k)
    if rec.mode == "bruin":
        r = _record_from_q(F, rec.data, rec.sample_index)
        assert r is not None
        return r
    return _plane_record(F, tuple(rec.curve), rec.data, rec.sample_index)


# ---------------------------------------------------------------------------
# table replay
# ---------------------------------------------------------------------------

@dataclass
class RowReport:
    p: int
    label: tuple[int, int]
    f: int
    fp: int
    X_smooth: bool
    Z_smooth: bool
    X_scalar: int | None          # printed = scalar * computed, raw display text
    X_scalar_repaired: int | None
    Z_scalar: int | None
    notes: list[str] = field(default_factory=list)

    @property
    def ranks_ok(self) -> bool:
        return (self.f, self.fp) == self.label

    @property
    def equations_ok(self) -> bool:
        return self.X_scalar_repaired is not None and self.Z_scalar is not None

    @property
    def passed(self) -> bool:
        return self.ranks_ok and self.X_smooth and self.Z_smooth and self.equations_ok

    def to_dict(self) -> dict:
        d = asdict(self)
        d.update(ranks_ok=self.ranks_ok, equations_ok=self.equations_ok, passed=self.passed)
        return d


def _parse_or_none(F: FieldCtx, text: str, names: Sequence[str]) -> MPoly | None:
    try:
        return parse_mpoly(F, text, names)
    except ValueError:
        return None


def check_row(row: TableRow) -> RowReport:
    F = make_ext(row.p)
    Q = QuadTriple.from_qvector(F, row.q)
    X = bruin_quartic(Q)
    Z = bruin_prym_sextic(Q)
    f = quartic_p_rank(X)
    fp = curve_p_rank(Z)
    xs = is_smooth_plane_quartic(X)
    notes = []
    x_text, z_text, xv, zv = row.x_text, row.z_text, row.x_vars, row.z_vars
    if row.swapped:
        x_text, z_text, xv, zv = z_text, x_text, zv, xv
        notes.append("X and Z displays exchanged")
    affine = dehomogenize(X, 2, 1)

    def x_scalar(text: str) -> int | None:
        P = _parse_or_none(F, text, xv)
        return None if P is None else proportional(P, affine)

    raw = x_scalar(x_text)
    fixed = raw
    if row.repair:
        old, new = row.repair
        fixed = x_scalar(x_text.replace(old, new))
        notes.append(f"X display differs from the recomputed quartic; "
                     f"matches after replacing {old.strip(' +')!r} by {new.strip(' +')!r}")
    if raw is None and fixed is None:
        notes.append("X display: " + x_text + " | recomputed: " + format_mpoly(affine, list(xv)))
    Zp = parse_mpoly(F, z_text, zv)
    Dp = sextic_from_printed(Zp)
    zs = proportional(_coeff_list(F, Dp.c), _coeff_list(F, Z.d))
    if zs is None:
        notes.append("Z display: " + z_text + " | recomputed D: " + sextic_text(Z))
    if (f, fp) != row.label:
        notes.append(f"recomputed (f, f') = ({f}, {fp}) differs from the label {row.label}")
    return RowReport(row.p, row.label, f, fp, xs, Z.is_smooth(), raw, fixed, zs, notes)


def verify_table(p: int) -> list[RowReport]:
    if p not in TABLE_PRIMES:
        raise ValueError(f"no table for p = {p}")
    return [check_row(r) for r in rows_for(p)]


# ---------------------------------------------------------------------------
# degree in b for z^2 = x^6 - 1, p = 5 mod 6
# ---------------------------------------------------------------------------

def node_field(p: int, count: int) -> FieldCtx:
    k = 1
    while p ** k < count:
        k += 1
    return make_ext(p, k)


@dataclass
class DegreeInB:
    p: int
    a: int
    c: int
    degree: int
    entries: list[list[UniPoly]]
    det: UniPoly
    mid_gamma_degrees: list[int]   # middle-column gamma terms, b-degree
    mid_entry_degrees: list[int]   # top and bottom middle-column entries
    diag_gamma_degrees: list[int]
    diagonal_degree: int
    lead: list[int]                # b^{p-1} coefficients
    sublead: int                   # b^{p-2} coefficient
    nodes: int
    node_field_size: int

    def summary(self) -> dict:
        p = self.p
        return {
            "p": p, "a": self.a, "c": self.c, "degree": self.degree, "expected_degree": 4 * (p - 1),
            "mid_gamma_degrees": self.mid_gamma_degrees, "mid_entry_degrees": self.mid_entry_degrees,
            "diag_gamma_degrees": self.diag_gamma_degrees, "diagonal_degree": self.diagonal_degree,
            "lead": self.lead, "lead_expected": (-pow(4, 2 * p - 2, p)) % p,
            "sublead": self.sublead, "sublead_expected": ((p - 1) * pow(-4, p - 1, p)) % p,
            "nodes": self.nodes, "node_field_size": self.node_field_size,
        }


def _c_in_b(sc: SectionCoefficients, a: int, c: int, e: Sequence[int]) -> UniPoly:
    """Coefficient of X^e in (v kappa)^{p-1}, v = aX1 + bX2 + cX3 + X4, as a polynomial in b."""
    F = sc.ctx
    p = F.p
    hp = sc.hp.terms
    out = [0] * p
    for m, mult in zip(sc.compositions, sc.multi):
        if not mult:
            continue
        r = tuple(ei - mi for ei, mi in zip(e, m))
        if min(r) < 0:
            continue
        co = hp.get(pack(r))
        if not co:
            continue
        t = F.mul(F.mul(co, F.from_int(mult)), F.mul(F.pow(a, m[0]), F.pow(c, m[2])))
        out[m[1]] = F.add(out[m[1]], t)
    return UniPoly(F, out)


def section_entries_in_b(sc: SectionCoefficients, a: int, c: int) -> list[list[UniPoly]]:
    """H_X for v = aX1 + bX2 + cX3 + X4 with b symbolic (pivot X4)."""
    F = sc.ctx
    p = F.p
    coeffs = [UniPoly(F, [a]), UniPoly(F, [0, 1]), UniPoly(F, [c])]
    rows = []
    for i in range(3):
        gi_t = _c_in_b(sc, a, c, gamma_exponent(p, i, 3))
        row = []
        for j in range(3):
            g = _c_in_b(sc, a, c, gamma_exponent(p, i, j))
            aj_p = coeffs[j]
            for _ in range(p - 1):
                aj_p = aj_p * coeffs[j]
            row.append(g - aj_p * gi_t)
        rows.append(row)
    return rows


def det3(m: list[list[UniPoly]]) -> UniPoly:
    a, b, c = m[0]
    d, e, f = m[1]
    g, h, i = m[2]
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def degree_in_b(p: int, seed: int = 0, a: int | None = None, c: int | None = None) -> DegreeInB:
    """deg_b det H_X for z^2 = x^6 - 1, by evaluation and interpolation in b.

    The evaluation route runs the section pipeline at nodes in an extension
    field; the symbolic route assembles the entries as polynomials in b.  Both
    must agree or AssertionError is raised."""
    if p % 6 != 5:
        raise ValueError("p must be 5 mod 6")
    F = make_ext(p)
    rng = random.Random(seed)
    a = F.random(rng, nonzero=True) if a is None else a
    c = F.random(rng, nonzero=True) if c is None else c
    Z = Genus2Curve.make(F, [F.neg(1), 0, 0, 0, 0, 0, 1])
    K = kummer_surface(Z)
    sc = SectionCoefficients(K.kappa)
    # symbolic route
    ent = section_entries_in_b(sc, a, c)
    det_sym = det3(ent)
    # evaluation route: entries have b-degree <= 2p-1, det <= 6p-3
    bound = 6 * p - 3
    L = node_field(p, bound + 1)
    emb = embedding(F, L)
    hL = MPoly(L, 4, {k: emb(x) for k, x in K.kappa.terms.items()})
    scL = SectionCoefficients(hL)
    KL = KummerSurface(Z, hL)
    nodes = list(range(bound + 1))
    dets, vals = [], [[[] for _ in range(3)] for _ in range(3)]
    for b in nodes:
        H = hasse_witt_section(Plane(L, emb(a), b, emb(c), 1).form(), KL.kappa, coefficients=scL).matrix
        dets.append((b, H.det()))
        for i in range(3):
            for j in range(3):
                vals[i][j].append((b, H.entries[i][j]))
    det_int = lagrange_interpolate(L, dets, bound)
    if det_int != emb.poly(det_sym):
        raise AssertionError("interpolated determinant disagrees with the symbolic route")
    for i in range(3):
        for j in range(3):
            if lagrange_interpolate(L, vals[i][j], 2 * p - 1) != emb.poly(ent[i][j]):
                raise AssertionError(f"entry ({i}, {j}) disagrees between routes")
    ce = lambda e: _c_in_b(sc, a, c, e)
    mid_gamma = [ce((p - 2, p - 1, p - 1, 2 * p - 1)).deg, ce((p - 1, p - 1, p - 2, 2 * p - 1)).deg]
    diag_gamma = [ce((2 * p - 2, p - 1, p - 1, p - 1)).deg, ce((p - 1, p - 1, 2 * p - 2, p - 1)).deg]
    lead = [ce((p - 2, p - 1, 2 * p - 1, p - 1)).coeff(p - 1),
              ce((2 * p - 1, p - 1, p - 2, p - 1)).coeff(p - 1)]
    sublead = ce((p - 1, p - 2, p - 1, 2 * p - 1)).coeff(p - 2)
    diag = ent[0][0] * ent[1][1] * ent[2][2]
    return DegreeInB(p, a, c, det_sym.deg, ent, det_sym, mid_gamma,
                     [ent[0][1].deg, ent[2][1].deg], diag_gamma, diag.deg,
                     lead, sublead, len(nodes), L.q)


# ---------------------------------------------------------------------------
# the p = 3 family z^2 = A(x) B(x)
# ---------------------------------------------------------------------------

DET_H_FACTORS = (
    ("α", 3), ("α + 1", 4), ("α - 1", 5), ("α^3 + α^2 + α - 1", 1),
    ("α^5 + α^4 + α^3 + α^2 - α + 1", 1), ("α^5 - α^4 + α^3 + α^2 + α + 1", 1),
    ("α^6 - α^4 + α^3 - α + 1", 1), ("α^7 + α^5 + α - 1", 1),
)

A_ENTRIES_IN_ALPHA = (
    ("α^13 - α^11 - α^10 + α^9 + α^7 + α^6 - α^3 - α^2 - 1",
     "-α^7 - α^6 + α^5 + α^4 + α^2 + α",
     "α^10 + α^9 + α^7 - α^6 + α^5 - α^4"),
    ("-α^16 - α^13 + α^11 + α^9 + α^8 + α^7 - α^5 + α^4 - α^3 - α^2",
     "α^13 + α^9 + α^8 + α^7 - α^6 - α^4 - α^3 - α^2 - α - 1",
     "-α^13 + α^10 + α^9 - α^6 + α^5 + α^4 + α^3 - α^2 - α - 1"),
    ("α^13 + α^12 - α^9 + α^8 + α^7 + α^6 - α^5 + α^2 + α",
     "α^10 - α^8 + α^7 + α^5 - α^4 - α^3 - α^2 - α - 1",
     "α^12 - α^10 + α^6 + α^5 - α^4 - α - 1"),
)

FIXALPHA_ENTRIES = (
    ("a^3c + b^2 + ac + (α + 1)(a^3 - bc + a) + (α - 1)(ab - b) - αc^2",
     "b^3c + (α + 1)b^3",
     "c^4 - ac + (α + 1)c^2(c - 1) + (-α + 1)b^2 + -α(ab + bc)"),
    ("a^3b - ab + (-α - 1)(a^3 + ac + c) + (-α + 1)(a^2 + c^2 + a - bc)",
     "b^4 + (-α - 1)b^3 - αc^2 + αb",
     "bc^3 + (-α - 1)c^3 + α(a^2 - ac + bc + c^2) + (α - 1)ab"),
    ("a^4 - a^2 + (-α + 1) + (α + 1)(a^3 - ab - b) + (-α + 1)(b^2 - bc - c) + αac",
     "ab^3 + (α + 1)b^3 + αbc",
     "ac^3 + a^2 + (α + 1)(c^3 + ac - c) - α(b^2 + bc + ab)"),
)


def alpha_poly(text: str) -> UniPoly:
    F = make_ext(3)
    P = parse_expr(F, text, ["α"])
    top = P.total_degree()
    return UniPoly(F, [P.terms.get(pack([i]), 0) for i in range(top + 1)])


def expected_det_h() -> tuple[UniPoly, list[tuple[UniPoly, int]]]:
    F = make_ext(3)
    prod = UniPoly(F, [1])
    facs = []
    for text, m in DET_H_FACTORS:
        g = alpha_poly(text)
        facs.append((g.monic(), m))
        for _ in range(m):
            prod = prod * g
    return prod, sorted(facs, key=lambda t: (t[0].deg, t[0].c[::-1]))


def section_matrix_alpha(alpha: int, ctx: FieldCtx, plane: Sequence[int]) -> HWMatrix:
    Z = family_z_alpha(ctx, alpha)
    K = kummer_surface(Z)
    return analyze_section(K, Plane(ctx, *plane), check_smooth=False).matrix


@dataclass
class DetHAlpha:
    poly: UniPoly
    factors: list[tuple[UniPoly, int]]
    nodes: int
    node_field_size: int


def det_h_alpha(plane: Sequence[int], bound: int = 48) -> DetHAlpha:
    """det H as a polynomial in α over F_3 by evaluating the pipeline at
    α in an extension and interpolating."""
    F3 = make_ext(3)
    plane = [F3.from_int(x) for x in plane]
    if plane[3] == 0:
        raise ValueError("plane passes through the node (0:0:0:1)")
    L = node_field(3, bound + 1 + 3)
    emb = embedding(F3, L)
    pl = [emb(x) for x in plane]
    excluded = {0, 1, L.neg(1)}
    nodes = [x for x in L.elements() if x not in excluded][:bound + 1]
    if len(nodes) < bound + 1:
        raise ValueError("not enough interpolation nodes")
    pts = [(al, section_matrix_alpha(al, L, pl).det()) for al in nodes]
    P = lagrange_interpolate(L, pts, bound)
    if not all(L.in_prime_field(x) for x in P.c):
        raise AssertionError("det H has coefficients outside F_3")
    P3 = UniPoly(F3, [x for x in P.c])
    _, facs = factor_univar(P3) if P3.deg > 0 else (P3.lc(), [])
    return DetHAlpha(P3, facs, len(nodes), L.q)


def printed_alpha_matrix(alpha: int, ctx: FieldCtx) -> list[list[int]]:
    emb = embedding(make_ext(3), ctx)
    return [[emb.poly(alpha_poly(t))(alpha) for t in row] for row in A_ENTRIES_IN_ALPHA]


def interpolate_grid(ctx: FieldCtx, nodes: Sequence[int], nvars: int, values: dict) -> MPoly:
    """Tensor-product interpolation: values[(i0, .., i_{n-1})] at node indices."""
    bound = len(nodes) - 1
    cur = dict(values)
    for axis in range(nvars):
        nxt = {}
        others = {k[:axis] + k[axis + 1:] for k in cur}
        for o in others:
            pts = [(nodes[i], cur[o[:axis] + (i,) + o[axis:]]) for i in range(bound + 1)]
            u = lagrange_interpolate(ctx, pts, bound)
            for e in range(bound + 1):
                nxt[o[:axis] + (e,) + o[axis:]] = u.coeff(e)
        cur = nxt
    return MPoly(ctx, nvars, {pack(k): v for k, v in cur.items() if v})


@dataclass
class FixAlpha:
    alpha: int
    entries: list[list[MPoly]]
    printed: list[list[MPoly]]
    matches: list[list[bool]]
    det_nonzero: bool
    smooth_202: bool
    rank_202: int


def fixalpha_entries(deg_bound: int = 5) -> list[FixAlpha]:
    """Entries of H for Z_α, α a root of t^2 + 2t + 2 in F_9, as polynomials in
    (a, b, c) with d = 1; one record per root."""
    F3 = make_ext(3)
    F9 = make_ext(3, 2)
    out = []
    t2 = UniPoly(F3, [2, 2, 1])
    nodes = list(F9.elements())[:deg_bound + 1]
    names = ["a", "b", "c"]
    for alpha in roots_in_ext(t2, F9):
        Z = family_z_alpha(F9, alpha)
        K = kummer_surface(Z)
        sc = SectionCoefficients(K.kappa)
        vals = [[{} for _ in range(3)] for _ in range(3)]
        for idx in product(range(deg_bound + 1), repeat=3):
            a, b, c = (nodes[i] for i in idx)
            H = hasse_witt_section(Plane(F9, a, b, c, 1).form(), K.kappa, coefficients=sc).matrix
            for i in range(3):
                for j in range(3):
                    vals[i][j][idx] = H.entries[i][j]
        ent = [[interpolate_grid(F9, nodes, 3, vals[i][j]) for j in range(3)] for i in range(3)]
        printed = [[parse_expr(F9, t, names, {"α": alpha}) for t in row] for row in FIXALPHA_ENTRIES]
        matches = [[ent[i][j] == printed[i][j] for j in range(3)] for i in range(3)]
        det = (ent[0][0] * (ent[1][1] * ent[2][2] - ent[1][2] * ent[2][1])
               - ent[0][1] * (ent[1][0] * ent[2][2] - ent[1][2] * ent[2][0])
               + ent[0][2] * (ent[1][0] * ent[2][1] - ent[1][1] * ent[2][0]))
        r = analyze_section(K, Plane(F9, 2, 0, 2, 1), sc)
        out.append(FixAlpha(alpha, ent, printed, matches, not det.is_zero(), r.smooth, r.f))
    return out


def stable_rank_agreement(ctx: FieldCtx, A: list[list[MPoly]], B: list[list[MPoly]],
                          points: Iterable[Sequence[int]]) -> tuple[int, int]:
    """Number of points where the two entry matrices give the same 3-rank."""
    agree = total = 0
    for P in points:
        ha = HWMatrix.of(ctx, [[e(P) for e in row] for row in A])
        hb = HWMatrix.of(ctx, [[e(P) for e in row] for row in B])
        agree += p_rank(ha, 3) == p_rank(hb, 3)
        total += 1
    return agree, total


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("PRYMRANK_THREADS", "1")))
    except ValueError:
        return 1
