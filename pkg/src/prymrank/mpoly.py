"""Sparse multivariate polynomials over a FieldCtx.

Exponent vectors are packed into one integer, 8 bits per variable with the
first variable most significant, so adding keys multiplies monomials and
integer order on keys is lexicographic order on exponents.
"""

from __future__ import annotations

import re
from math import factorial
from typing import Sequence

from .gf import FieldCtx, UniPoly, lagrange_interpolate

BITS = 8
MASK = (1 << BITS) - 1
MAX_EXP = MASK


def pack(exps: Sequence[int]) -> int:
    key = 0
    for e in exps:
        if not 0 <= e <= MAX_EXP:
            raise ValueError(f"exponent {e} outside packed range")
        key = (key << BITS) | e
    return key


def unpack(key: int, n: int) -> tuple[int, ...]:
    out = [0] * n
    for i in range(n - 1, -1, -1):
        out[i] = key & MASK
        key >>= BITS
    return tuple(out)


def key_degree(key: int) -> int:
    d = 0
    while key:
        d += key & MASK
        key >>= BITS
    return d


def _unit_key(i: int, n: int) -> int:
    return 1 << (BITS * (n - 1 - i))


class MPoly:
    __slots__ = ("ctx", "nvars", "terms")

    def __init__(self, ctx: FieldCtx, nvars: int, terms: dict[int, int] | None = None):
        self.ctx = ctx
        self.nvars = nvars
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    # -- construction ------------------------------------------------------
    @classmethod
    def zero(cls, ctx: FieldCtx, nvars: int) -> "MPoly":
        return cls(ctx, nvars, {})

    @classmethod
    def const(cls, ctx: FieldCtx, nvars: int, c: int) -> "MPoly":
        return cls(ctx, nvars, {0: c} if c else {})

    @classmethod
    def var(cls, ctx: FieldCtx, nvars: int, i: int) -> "MPoly":
        return cls(ctx, nvars, {_unit_key(i, nvars): 1})

    @classmethod
    def from_dict(cls, ctx: FieldCtx, nvars: int, d: dict[tuple, int]) -> "MPoly":
        terms: dict[int, int] = {}
        for e, c in d.items():
            k = pack(e)
            terms[k] = ctx.add(terms.get(k, 0), c)
        return cls(ctx, nvars, terms)

    def to_dict(self) -> dict[tuple, int]:
        return {unpack(k, self.nvars): c for k, c in self.terms.items()}

    def copy(self) -> "MPoly":
        return MPoly(self.ctx, self.nvars, dict(self.terms))

    # -- basic queries -----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        return (isinstance(other, MPoly) and self.ctx == other.ctx
                and self.nvars == other.nvars and self.terms == other.terms)

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"MPoly({self.format()})"

    def total_degree(self) -> int:
        return max((key_degree(k) for k in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {key_degree(k) for k in self.terms}
        return len(degs) <= 1

    def degree_in(self, i: int) -> int:
        sh = BITS * (self.nvars - 1 - i)
        return max(((k >> sh) & MASK for k in self.terms), default=-1)

    def _check(self, o: "MPoly") -> None:
        if o.ctx != self.ctx or o.nvars != self.nvars:
            raise ValueError("polynomials over different rings")

    # -- ring operations ---------------------------------------------------
    def __add__(self, o: "MPoly") -> "MPoly":
        self._check(o)
        F = self.ctx
        r = dict(self.terms)
        if F.mode == "prime":
            p = F.p
            for k, c in o.terms.items():
                r[k] = (r.get(k, 0) + c) % p
        else:
            for k, c in o.terms.items():
                r[k] = F.add(r.get(k, 0), c)
        return MPoly(F, self.nvars, r)

    def __neg__(self) -> "MPoly":
        F = self.ctx
        return MPoly(F, self.nvars, {k: F.neg(c) for k, c in self.terms.items()})

    def __sub__(self, o: "MPoly") -> "MPoly":
        return self + (-o)

    def scale(self, c: int) -> "MPoly":
        F = self.ctx
        if c == 0:
            return MPoly(F, self.nvars)
        return MPoly(F, self.nvars, {k: F.mul(v, c) for k, v in self.terms.items()})

    def mul_monomial(self, key: int, c: int = 1) -> "MPoly":
        F = self.ctx
        return MPoly(F, self.nvars, {k + key: F.mul(v, c) for k, v in self.terms.items()})

    def __mul__(self, o: "MPoly") -> "MPoly":
        self._check(o)
        return MPoly(self.ctx, self.nvars, _mul_terms(self.ctx, self.terms, o.terms))

    def __pow__(self, e: int) -> "MPoly":
        return mp_pow(self, e)

    # -- evaluation and substitution ---------------------------------------
    def __call__(self, point: Sequence[int]) -> int:
        return evaluate(self, point)

    def format(self, names: Sequence[str] | None = None) -> str:
        return format_mpoly(self, names)


def _mul_terms(F: FieldCtx, a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    if not a or not b:
        return {}
    if len(a) < len(b):
        a, b = b, a
    bl = list(b.items())
    r: dict[int, int] = {}
    get = r.get
    if F.mode == "prime":
        p = F.p
        for ka, ca in a.items():
            for kb, cb in bl:
                k = ka + kb
                r[k] = get(k, 0) + ca * cb
        return {k: v % p for k, v in r.items() if v % p}
    if F.mode == "table":
        exp, log, zech = F._exp, F._log, F._zech
        qm1 = F.q - 1
        bl = [(kb, log[cb]) for kb, cb in bl]
        for ka, ca in a.items():
            la = log[ca]
            for kb, lb in bl:
                k = ka + kb
                v = exp[la + lb]
                cur = get(k, 0)
                if cur == 0:
                    r[k] = v
                else:
                    lc = log[cur]
                    d = log[v] - lc
                    if d < 0:
                        d += qm1
                    z = zech[d]
                    r[k] = 0 if z < 0 else exp[lc + z]
        return {k: v for k, v in r.items() if v}
    add, mul = F.add, F.mul
    for ka, ca in a.items():
        for kb, cb in bl:
            k = ka + kb
            r[k] = add(get(k, 0), mul(ca, cb))
    return {k: v for k, v in r.items() if v}


def mp_pow(f: MPoly, e: int, method: str = "iterated") -> MPoly:
    """f^e.  "iterated" multiplies by f repeatedly (cheaper when f is sparse
    and the power dense); "binary" uses square-and-multiply."""
    if e < 0:
        raise ValueError("negative exponent")
    one = MPoly.const(f.ctx, f.nvars, 1)
    if e == 0:
        return one
    d = f.total_degree()
    if d > 0:
        for i in range(f.nvars):
            if f.degree_in(i) * e > MAX_EXP:
                raise ValueError("power exceeds packed exponent range")
    if method == "iterated":
        r = f
        for _ in range(e - 1):
            r = r * f
        return r
    if method == "binary":
        r, base = one, f
        while e:
            if e & 1:
                r = r * base
            e >>= 1
            if e:
                base = base * base
        return r
    raise ValueError(f"unknown powering method {method!r}")


def coeff(f: MPoly, expo: Sequence[int]) -> int:
    if len(expo) != f.nvars:
        raise ValueError("exponent length does not match variable count")
    if any(e < 0 or e > MAX_EXP for e in expo):
        return 0
    return f.terms.get(pack(expo), 0)


def partial(f: MPoly, i: int) -> MPoly:
    if not 0 <= i < f.nvars:
        raise ValueError("variable index out of range")
    F = f.ctx
    sh = BITS * (f.nvars - 1 - i)
    unit = 1 << sh
    out: dict[int, int] = {}
    for k, c in f.terms.items():
        e = (k >> sh) & MASK
        if e % F.p:
            out[k - unit] = F.mul(c, F.from_int(e))
    return MPoly(F, f.nvars, out)


def evaluate(f: MPoly, point: Sequence[int]) -> int:
    F = f.ctx
    n = f.nvars
    if len(point) != n:
        raise ValueError("point has wrong dimension")
    pw: list[list[int]] = []
    for i in range(n):
        top = f.degree_in(i)
        row = [1]
        for _ in range(max(top, 0)):
            row.append(F.mul(row[-1], point[i]))
        pw.append(row)
    acc = 0
    for k, c in f.terms.items():
        v = c
        ex = unpack(k, n)
        for i in range(n):
            if ex[i]:
                v = F.mul(v, pw[i][ex[i]])
        acc = F.add(acc, v)
    return acc


def substitute(f: MPoly, images: Sequence[MPoly]) -> MPoly:
    """Replace variable i by images[i]; images share a ring."""
    if len(images) != f.nvars:
        raise ValueError("need one image per variable")
    tgt = images[0]
    F, m = tgt.ctx, tgt.nvars
    cache: dict[tuple[int, int], MPoly] = {}

    def power(i: int, e: int) -> MPoly:
        if (i, e) not in cache:
            cache[(i, e)] = MPoly.const(F, m, 1) if e == 0 else power(i, e - 1) * images[i]
        return cache[(i, e)]

    acc = MPoly.zero(F, m)
    for k, c in f.terms.items():
        term = MPoly.const(F, m, c)
        for i, e in enumerate(unpack(k, f.nvars)):
            if e:
                term = term * power(i, e)
        acc = acc + term
    return acc


def coefficients_in(f: MPoly, i: int) -> dict[int, MPoly]:
    """f = sum_j C_j * x_i^j with C_j free of x_i."""
    sh = BITS * (f.nvars - 1 - i)
    out: dict[int, dict[int, int]] = {}
    for k, c in f.terms.items():
        e = (k >> sh) & MASK
        out.setdefault(e, {})[k - (e << sh)] = c
    return {e: MPoly(f.ctx, f.nvars, t) for e, t in out.items()}


def to_unipoly(f: MPoly, i: int) -> UniPoly:
    """View f, which may only involve variable i, as a univariate polynomial."""
    sh = BITS * (f.nvars - 1 - i)
    c: dict[int, int] = {}
    for k, v in f.terms.items():
        e = (k >> sh) & MASK
        if k - (e << sh):
            raise ValueError("polynomial involves other variables")
        c[e] = v
    top = max(c, default=-1)
    return UniPoly(f.ctx, [c.get(j, 0) for j in range(top + 1)])


def from_unipoly(u: UniPoly, nvars: int, i: int) -> MPoly:
    unit = _unit_key(i, nvars)
    return MPoly(u.ctx, nvars, {j * unit: c for j, c in enumerate(u.c) if c})


def _divides(small: int, big: int, n: int) -> bool:
    for _ in range(n):
        if (small & MASK) > (big & MASK):
            return False
        small >>= BITS
        big >>= BITS
    return True


def exact_div(a: MPoly, b: MPoly) -> MPoly:
    """a / b, raising if b does not divide a."""
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    F = a.ctx
    r = dict(a.terms)
    lk = max(b.terms)
    inv = F.inv(b.terms[lk])
    bl = list(b.terms.items())
    q: dict[int, int] = {}
    while r:
        k = max(r)
        if not _divides(lk, k, a.nvars):
            raise ArithmeticError("inexact multivariate division")
        m = k - lk
        c = F.mul(r[k], inv)
        q[m] = c
        for kb, cb in bl:
            kk = kb + m
            v = F.sub(r.get(kk, 0), F.mul(c, cb))
            if v:
                r[kk] = v
            else:
                r.pop(kk, None)
    return MPoly(F, a.nvars, q)


def bareiss_det(M: list[list[MPoly]]) -> MPoly:
    """Fraction-free determinant of a square matrix with MPoly entries."""
    n = len(M)
    if n == 0:
        raise ValueError("empty matrix")
    A = [row[:] for row in M]
    F, nv = A[0][0].ctx, A[0][0].nvars
    sign = 1
    prev = MPoly.const(F, nv, 1)
    for k in range(n - 1):
        if A[k][k].is_zero():
            piv = next((i for i in range(k + 1, n) if not A[i][k].is_zero()), None)
            if piv is None:
                return MPoly.zero(F, nv)
            A[k], A[piv] = A[piv], A[k]
            sign = -sign
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            for j in range(k + 1, n):
                num = A[i][j] * akk - aik * A[k][j]
                A[i][j] = exact_div(num, prev) if not num.is_zero() else num
        prev = akk
    det = A[n - 1][n - 1]
    return det if sign == 1 else -det


def sylvester_matrix(f: MPoly, g: MPoly, i: int) -> list[list[MPoly]]:
    cf, cg = coefficients_in(f, i), coefficients_in(g, i)
    m = max(cf, default=-1)
    n = max(cg, default=-1)
    if m < 0 or n < 0:
        raise ValueError("resultant of a zero polynomial")
    if m == 0 and n == 0:
        raise ValueError("both polynomials have degree 0 in the elimination variable")
    Z = MPoly.zero(f.ctx, f.nvars)
    size = m + n
    rows = []
    for r in range(n):
        row = [Z] * size
        for j in range(m + 1):
            row[r + (m - j)] = cf.get(j, Z)
        rows.append(row)
    for r in range(m):
        row = [Z] * size
        for j in range(n + 1):
            row[r + (n - j)] = cg.get(j, Z)
        rows.append(row)
    return rows


def resultant_wrt(f: MPoly, g: MPoly, i: int) -> MPoly:
    """Sylvester resultant eliminating variable i (the result is free of it)."""
    return bareiss_det(sylvester_matrix(f, g, i))


def interpolate(ctx: FieldCtx, nodes: Sequence[tuple[int, int]], bound: int) -> UniPoly:
    return lagrange_interpolate(ctx, nodes, bound)


def multinomial(parts: Sequence[int]) -> int:
    r = factorial(sum(parts))
    for m in parts:
        r //= factorial(m)
    return r


# ---------------------------------------------------------------------------
# text form
# ---------------------------------------------------------------------------

def graded_lex_keys(f: MPoly, descending: bool = True) -> list[int]:
    return sorted(f.terms, key=lambda k: (key_degree(k), k), reverse=descending)


def _fmt_coeff(F: FieldCtx, c: int) -> str:
    return str(c) if F.k == 1 else "[" + F.format(c) + "]"


def format_mpoly(f: MPoly, names: Sequence[str] | None = None) -> str:
    n = f.nvars
    names = list(names) if names else [f"X{i + 1}" for i in range(n)]
    if not f.terms:
        return "0"
    out = []
    for k in graded_lex_keys(f):
        c = f.terms[k]
        ex = unpack(k, n)
        facs = []
        for nm, e in zip(names, ex):
            if e == 1:
                facs.append(nm)
            elif e > 1:
                facs.append(f"{nm}^{e}")
        if not facs:
            out.append(_fmt_coeff(f.ctx, c))
        elif c == 1:
            out.append("*".join(facs))
        else:
            out.append(_fmt_coeff(f.ctx, c) + "*" + "*".join(facs))
    return " + ".join(out)


_NUM = re.compile(r"\d+")
_BRACKET = re.compile(r"\[([0-9,\s-]+)\]")


def parse_mpoly(ctx: FieldCtx, text: str, names: Sequence[str]) -> MPoly:
    """Parse a sum of monomials; '*' between factors is optional."""
    n = len(names)
    order = sorted(range(n), key=lambda i: -len(names[i]))
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ValueError("empty polynomial text")
    terms: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        sign = 1
        while pos < len(s) and s[pos] in "+-":
            if s[pos] == "-":
                sign = -sign
            pos += 1
        coef = 1
        exps = [0] * n
        seen = False
        while pos < len(s) and s[pos] not in "+-":
            if s[pos] == "*":
                pos += 1
                continue
            m = _NUM.match(s, pos)
            if m:
                coef = ctx.mul(coef, ctx.from_int(int(m.group())))
                pos = m.end()
                seen = True
                continue
            m = _BRACKET.match(s, pos)
            if m:
                coef = ctx.mul(coef, ctx.parse(m.group(1)))
                pos = m.end()
                seen = True
                continue
            for i in order:
                nm = names[i]
                if s.startswith(nm, pos):
                    pos += len(nm)
                    e = 1
                    if pos < len(s) and s[pos] == "^":
                        m = _NUM.match(s, pos + 1)
                        if not m:
                            raise ValueError(f"bad exponent at {pos} in {text!r}")
                        e = int(m.group())
                        pos = m.end()
                    exps[i] += e
                    seen = True
                    break
            else:
                raise ValueError(f"unexpected symbol {s[pos]!r} in {text!r}")
        if not seen:
            raise ValueError(f"empty term in {text!r}")
        if sign < 0:
            coef = ctx.neg(coef)
        k = pack(exps)
        terms[k] = ctx.add(terms.get(k, 0), coef)
    return MPoly(ctx, n, terms)


def linear_form(ctx: FieldCtx, coeffs: Sequence[int]) -> MPoly:
    n = len(coeffs)
    return MPoly(ctx, n, {_unit_key(i, n): c for i, c in enumerate(coeffs) if c})


def monomial(ctx: FieldCtx, exps: Sequence[int], c: int = 1) -> MPoly:
    return MPoly(ctx, len(exps), {pack(exps): c})


_TOKEN = re.compile(r"\s*(?:(\d+)|(\[[0-9,\s-]+\])|([A-Za-z_Ͱ-Ͽ][A-Za-z0-9_Ͱ-Ͽ]*)|(.))")


def parse_expr(ctx: FieldCtx, text: str, names: Sequence[str],
               constants: dict[str, int] | None = None) -> MPoly:
    """Parse an expression with + - * ^, parentheses and implicit products.

    Identifiers are split greedily into variable names and named constants, so
    'a^3c' and '(α+1)(a-b)' are read as products.
    """
    n = len(names)
    constants = dict(constants or {})
    symbols = sorted(list(names) + list(constants), key=len, reverse=True)
    toks: list[tuple[str, object]] = []
    for m in _TOKEN.finditer(text.replace("−", "-")):
        num, br, ident, other = m.groups()
        if num:
            toks.append(("num", int(num)))
        elif br:
            toks.append(("num_ext", ctx.parse(br[1:-1])))
        elif ident:
            pos = 0
            while pos < len(ident):
                for s in symbols:
                    if ident.startswith(s, pos):
                        toks.append(("sym", s))
                        pos += len(s)
                        break
                else:
                    raise ValueError(f"unknown symbol in {ident!r}")
        elif other and not other.isspace():
            toks.append(("op", other))
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else ("end", None)

    def take():
        nonlocal pos
        pos += 1
        return toks[pos - 1]

    def atom() -> MPoly:
        kind, val = take()
        if kind == "num":
            return MPoly.const(ctx, n, ctx.from_int(val))
        if kind == "num_ext":
            return MPoly.const(ctx, n, val)
        if kind == "sym":
            if val in constants:
                return MPoly.const(ctx, n, constants[val])
            return MPoly.var(ctx, n, list(names).index(val))
        if (kind, val) == ("op", "("):
            r = expr()
            if take() != ("op", ")"):
                raise ValueError(f"unbalanced parenthesis in {text!r}")
            return r
        raise ValueError(f"unexpected token {val!r} in {text!r}")

    def power() -> MPoly:
        b = atom()
        if peek() == ("op", "^"):
            take()
            kind, e = take()
            if kind != "num":
                raise ValueError(f"bad exponent in {text!r}")
            return b ** e
        return b

    def term() -> MPoly:
        r = power()
        while True:
            kind, val = peek()
            if (kind, val) == ("op", "*"):
                take()
                r = r * power()
            elif kind in ("num", "num_ext", "sym") or (kind, val) == ("op", "("):
                r = r * power()
            else:
                return r

    def signed() -> MPoly:
        if peek() in (("op", "-"), ("op", "+")):
            neg = take()[1] == "-"
            r = signed()
            return -r if neg else r
        return term()

    def expr() -> MPoly:
        r = signed()
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            t = signed()
            r = r + t if op == "+" else r - t
        return r

    out = expr()
    if pos != len(toks):
        raise ValueError(f"trailing input in {text!r}")
    return out
