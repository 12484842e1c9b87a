"""Finite fields F_p and F_{p^k} with univariate polynomial utilities.

Elements are plain integer codes: the element sum(c_i x^i) of F_p[x]/(m) is
stored as sum(c_i p^i).  Prime-subfield elements therefore have the same code
in every extension of the same characteristic, which makes embedding F_p into
F_{p^k} free.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

TABLE_LIMIT = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# dense F_p[x] helpers on lists of residues (low degree first); used to build
# extension contexts before any FieldCtx exists for them
# ---------------------------------------------------------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _zp_mulmod(a: list[int], b: list[int], m: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    r = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                r[i + j] += x * y
    return _zp_rem([c % p for c in r], m, p)


def _zp_rem(a: list[int], m: list[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    dm = len(m) - 1
    inv = pow(m[-1], -1, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv % p
        s = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[s + i] = (a[s + i] - c * mc) % p
        _trim(a)
    return a


def _zp_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(a[:]), _trim(b[:])
    while b:
        a, b = b, _zp_rem(a, b, p)
    return a


def _zp_powmod(a: list[int], e: int, m: list[int], p: int) -> list[int]:
    r = [1]
    a = _zp_rem(a, m, p)
    while e:
        if e & 1:
            r = _zp_mulmod(r, a, m, p)
        e >>= 1
        if e:
            a = _zp_mulmod(a, a, m, p)
    return r


def is_irreducible_mod_p(m: Sequence[int], p: int) -> bool:
    """Distinct-degree test: gcd(x^{p^d} - x, m) = 1 for all d <= deg(m)/2."""
    m = _trim([c % p for c in m])
    k = len(m) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    inv = pow(m[-1], -1, p)
    m = [c * inv % p for c in m]
    h = [0, 1]
    for _ in range(k // 2):
        h = _zp_powmod(h, p, m, p)
        diff = h[:] + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        g = _zp_gcd(m, _trim(diff), p)
        if len(g) > 1:
            return False
    return True


def first_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree k, ordering lower coefficients by
    their base-p code (c_{k-1} most significant)."""
    for code in range(p ** k):
        low = [(code // p ** i) % p for i in range(k)]
        m = low + [1]
        if k > 1 and m[0] == 0:
            continue
        if is_irreducible_mod_p(m, p):
            return tuple(m)
    raise ValueError(f"no irreducible of degree {k} over F_{p}")  # unreachable


# ---------------------------------------------------------------------------
# field context
# ---------------------------------------------------------------------------

class FieldCtx:
    """F_{p^k} with elements encoded as integers in [0, p^k).

    Small fields (q <= 2^16) use exp/log/Zech tables; larger ones fall back to
    polynomial arithmetic modulo the defining polynomial.
    """

    __slots__ = ("p", "k", "q", "modulus", "mode", "_exp", "_log", "_zech",
                 "_half", "_gen")

    def __init__(self, p: int, k: int = 1, modulus: Sequence[int] | None = None):
        if p == 2 or not is_prime(p):
            raise ValueError(f"characteristic must be an odd prime, got {p}")
        if k < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.k = k
        self.q = p ** k
        if k == 1:
            self.modulus = None
            self.mode = "prime"
        else:
            if modulus is None:
                modulus = first_irreducible(p, k)
            mod = [c % p for c in modulus]
            if len(_trim(mod[:])) != k + 1 or mod[-1] != 1:
                raise ValueError("modulus must be monic of degree k")
            if not is_irreducible_mod_p(mod, p):
                raise ValueError("modulus is reducible")
            self.modulus = tuple(mod)
            self.mode = "table" if self.q <= TABLE_LIMIT else "poly"
        self._exp = self._log = self._zech = None
        self._half = (self.q - 1) // 2
        self._gen = None
        if self.mode == "table":
            self._build_tables()

    def __repr__(self) -> str:
        if self.k == 1:
            return f"FieldCtx(F_{self.p})"
        return f"FieldCtx(F_{self.p}^{self.k}, modulus={list(self.modulus)})"

    def __eq__(self, other) -> bool:
        return (isinstance(other, FieldCtx) and self.p == other.p
                and self.k == other.k and self.modulus == other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.k, self.modulus))

    # -- code <-> coefficient vectors --------------------------------------
    def to_coeffs(self, a: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.k):
            a, r = divmod(a, p)
            out.append(r)
        return out

    def from_coeffs(self, cs: Iterable[int]) -> int:
        cs = [c % self.p for c in cs]
        if len(cs) > self.k:
            if self.modulus is None:
                raise ValueError("too many coefficients for a prime field element")
            cs = _zp_rem(cs, list(self.modulus), self.p)
        code = 0
        for c in reversed(cs):
            code = code * self.p + c
        return code

    def from_int(self, n: int) -> int:
        return n % self.p

    def gen(self) -> int:
        """The class of x (the adjoined root of the modulus)."""
        return self.p if self.k > 1 else 0

    def primitive(self) -> int:
        if self._gen is None:
            self._gen = self._find_primitive()
        return self._gen

    def _find_primitive(self) -> int:
        n = self.q - 1
        fs = [f for f in range(2, n + 1) if n % f == 0 and is_prime(f)]
        for g in range(1, self.q):
            if all(self._slow_pow(g, n // f) != 1 for f in fs):
                return g
        raise AssertionError("no primitive element")

    def _build_tables(self) -> None:
        q = self.q
        g = self.primitive()
        exp = [0] * (2 * q)
        log = [0] * q
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, g)
        for i in range(q - 1, 2 * q):
            exp[i] = exp[i - (q - 1)]
        # zech[n] = log(1 + g^n), or -1 when 1 + g^n = 0
        zech = [0] * (q - 1)
        for n in range(q - 1):
            s = self._slow_add(1, exp[n])
            zech[n] = -1 if s == 0 else log[s]
        self._exp, self._log, self._zech = exp, log, zech

    # -- slow paths (polynomial arithmetic on digits) -----------------------
    def _slow_add(self, a: int, b: int) -> int:
        p = self.p
        r, mult = 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            r += ((x + y) % p) * mult
            mult *= p
        return r

    def _slow_neg(self, a: int) -> int:
        p = self.p
        r, mult = 0, 1
        while a:
            a, x = divmod(a, p)
            r += ((-x) % p) * mult
            mult *= p
        return r

    def _slow_mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        return self.from_coeffs(_zp_mulmod(self.to_coeffs(a), self.to_coeffs(b),
                                           list(self.modulus), self.p))

    def _slow_pow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._slow_mul(r, a)
            e >>= 1
            if e:
                a = self._slow_mul(a, a)
        return r

    # -- arithmetic --------------------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.mode == "prime":
            return (a + b) % self.p
        if a == 0:
            return b
        if b == 0:
            return a
        if self.mode == "table":
            la = self._log[a]
            d = self._log[b] - la
            if d < 0:
                d += self.q - 1
            z = self._zech[d]
            return 0 if z < 0 else self._exp[la + z]
        return self._slow_add(a, b)

    def neg(self, a: int) -> int:
        if self.mode == "prime":
            return -a % self.p
        if a == 0:
            return 0
        if self.mode == "table":
            return self._exp[self._log[a] + self._half]
        return self._slow_neg(a)

    def sub(self, a: int, b: int) -> int:
        if self.mode == "prime":
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.mode == "prime":
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        if self.mode == "table":
            return self._exp[self._log[a] + self._log[b]]
        return self._slow_mul(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.mode == "prime":
            return pow(a, -1, self.p)
        if self.mode == "table":
            la = self._log[a]
            return self._exp[(self.q - 1 - la) % (self.q - 1)]
        return self._slow_pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if e == 0:
            return 1
        if a == 0:
            return 0
        if self.mode == "prime":
            return pow(a, e, self.p)
        if self.mode == "table":
            return self._exp[(self._log[a] * e) % (self.q - 1)]
        return self._slow_pow(a, e % (self.q - 1) or (self.q - 1))

    def frob(self, a: int, i: int = 1) -> int:
        """a^{p^i} by square-and-multiply."""
        if self.k == 1:
            return a
        i %= self.k
        if i == 0:
            return a
        return self.pow(a, self.p ** i)

    def is_square(self, a: int) -> bool:
        if a == 0:
            return True
        if self.mode == "table":
            return self._log[a] % 2 == 0
        return self.pow(a, self._half) == 1

    def sqrt(self, a: int) -> int | None:
        """Some square root of a, or None.  Small fields only."""
        if a == 0:
            return 0
        if self.mode == "table":
            la = self._log[a]
            return None if la % 2 else self._exp[la // 2]
        if self.mode == "prime":
            for r in range(self.p):
                if r * r % self.p == a:
                    return r
            return None
        roots = roots_in_ext(UniPoly(self, [self.neg(a), 0, 1]), self)
        return roots[0] if roots else None

    def elements(self) -> range:
        return range(self.q)

    def random(self, rng: random.Random, nonzero: bool = False) -> int:
        return rng.randrange(1 if nonzero else 0, self.q)

    def in_prime_field(self, a: int) -> bool:
        return a < self.p

    # -- text form "c0,c1,...,c_{k-1}" ------------------------------------
    def format(self, a: int) -> str:
        if self.k == 1:
            return str(a)
        return ",".join(str(c) for c in self.to_coeffs(a))

    def parse(self, text: str) -> int:
        parts = [t for t in text.replace(" ", "").split(",") if t != ""]
        if not parts:
            raise ValueError("empty element text")
        return self.from_coeffs(int(t) for t in parts)


@lru_cache(maxsize=None)
def _make_ext_cached(p: int, k: int, modulus: tuple[int, ...] | None) -> FieldCtx:
    return FieldCtx(p, k, modulus)


def make_ext(p: int, k: int = 1, modulus: Sequence[int] | None = None) -> FieldCtx:
    """F_{p^k}; the modulus defaults to the deterministic first irreducible."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"characteristic must be an odd prime, got {p}")
    if k > 1 and modulus is None:
        modulus = first_irreducible(p, k)
    return _make_ext_cached(p, k, tuple(c % p for c in modulus) if modulus else None)


def frobenius(ctx: FieldCtx, x: int, i: int = 1) -> int:
    return ctx.frob(x, i)


@dataclass(frozen=True)
class FieldElem:
    """Convenience wrapper pairing a code with its context."""

    ctx: FieldCtx
    code: int

    def _chk(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.ctx != self.ctx:
                raise ValueError("elements from different fields")
            return other.code
        if isinstance(other, int):
            return self.ctx.from_int(other)
        return NotImplemented

    def __add__(self, o):
        return FieldElem(self.ctx, self.ctx.add(self.code, self._chk(o)))

    __radd__ = __add__

    def __sub__(self, o):
        return FieldElem(self.ctx, self.ctx.sub(self.code, self._chk(o)))

    def __rsub__(self, o):
        return FieldElem(self.ctx, self.ctx.sub(self._chk(o), self.code))

    def __mul__(self, o):
        return FieldElem(self.ctx, self.ctx.mul(self.code, self._chk(o)))

    __rmul__ = __mul__

    def __truediv__(self, o):
        return FieldElem(self.ctx, self.ctx.div(self.code, self._chk(o)))

    def __neg__(self):
        return FieldElem(self.ctx, self.ctx.neg(self.code))

    def __pow__(self, e: int):
        return FieldElem(self.ctx, self.ctx.pow(self.code, e))

    def inv(self) -> "FieldElem":
        return FieldElem(self.ctx, self.ctx.inv(self.code))

    def frob(self, i: int = 1) -> "FieldElem":
        return FieldElem(self.ctx, self.ctx.frob(self.code, i))

    def __bool__(self) -> bool:
        return self.code != 0

    def __str__(self) -> str:
        return self.ctx.format(self.code)


# ---------------------------------------------------------------------------
# univariate polynomials over a FieldCtx
# ---------------------------------------------------------------------------

class UniPoly:
    """Dense univariate polynomial, coefficients low degree first."""

    __slots__ = ("ctx", "c")

    def __init__(self, ctx: FieldCtx, coeffs: Iterable[int] = ()):
        self.ctx = ctx
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.c = c

    @classmethod
    def x(cls, ctx: FieldCtx) -> "UniPoly":
        return cls(ctx, [0, 1])

    @classmethod
    def const(cls, ctx: FieldCtx, a: int) -> "UniPoly":
        return cls(ctx, [a])

    def __repr__(self) -> str:
        return f"UniPoly({self.ctx!r}, {self.c})"

    def __eq__(self, other) -> bool:
        return isinstance(other, UniPoly) and self.ctx == other.ctx and self.c == other.c

    def __hash__(self) -> int:
        return hash((self.ctx, tuple(self.c)))

    @property
    def deg(self) -> int:
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def lc(self) -> int:
        return self.c[-1] if self.c else 0

    def coeff(self, i: int) -> int:
        return self.c[i] if 0 <= i < len(self.c) else 0

    def __add__(self, o: "UniPoly") -> "UniPoly":
        F = self.ctx
        a, b = self.c, o.c
        if len(a) < len(b):
            a, b = b, a
        r = a[:]
        for i, y in enumerate(b):
            r[i] = F.add(r[i], y)
        return UniPoly(F, r)

    def __neg__(self) -> "UniPoly":
        F = self.ctx
        return UniPoly(F, [F.neg(x) for x in self.c])

    def __sub__(self, o: "UniPoly") -> "UniPoly":
        return self + (-o)

    def __mul__(self, o) -> "UniPoly":
        F = self.ctx
        if isinstance(o, int):
            return UniPoly(F, [F.mul(x, o) for x in self.c])
        a, b = self.c, o.c
        if not a or not b:
            return UniPoly(F, [])
        if F.mode == "prime":
            p = F.p
            r = [0] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        r[i + j] += x * y
            return UniPoly(F, [v % p for v in r])
        r = [0] * (len(a) + len(b) - 1)
        add, mul = F.add, F.mul
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        r[i + j] = add(r[i + j], mul(x, y))
        return UniPoly(F, r)

    def scale(self, a: int) -> "UniPoly":
        F = self.ctx
        return UniPoly(F, [F.mul(x, a) for x in self.c])

    def shift(self, n: int) -> "UniPoly":
        return UniPoly(self.ctx, [0] * n + self.c) if self.c else self

    def monic(self) -> "UniPoly":
        if not self.c:
            return self
        return self.scale(self.ctx.inv(self.c[-1]))

    def divmod(self, d: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        F = self.ctx
        if not d.c:
            raise ZeroDivisionError("polynomial division by zero")
        r = self.c[:]
        dd = len(d.c) - 1
        if len(r) - 1 < dd:
            return UniPoly(F, []), UniPoly(F, r)
        inv = F.inv(d.c[-1])
        qt = [0] * (len(r) - dd)
        dc = d.c
        if F.mode == "prime":
            p = F.p
            for s in range(len(r) - 1 - dd, -1, -1):
                c = r[s + dd] * inv % p
                qt[s] = c
                if c:
                    for i in range(dd + 1):
                        r[s + i] = (r[s + i] - c * dc[i]) % p
        else:
            sub, mul = F.sub, F.mul
            for s in range(len(r) - 1 - dd, -1, -1):
                c = mul(r[s + dd], inv)
                qt[s] = c
                if c:
                    for i in range(dd + 1):
                        r[s + i] = sub(r[s + i], mul(c, dc[i]))
        return UniPoly(F, qt), UniPoly(F, r[:dd])

    def __mod__(self, d: "UniPoly") -> "UniPoly":
        return self.divmod(d)[1]

    def __floordiv__(self, d: "UniPoly") -> "UniPoly":
        return self.divmod(d)[0]

    def deriv(self) -> "UniPoly":
        F = self.ctx
        return UniPoly(F, [F.mul(F.from_int(i), self.c[i]) for i in range(1, len(self.c))])

    def __call__(self, x: int) -> int:
        F = self.ctx
        r = 0
        for a in reversed(self.c):
            r = F.add(F.mul(r, x), a)
        return r

    def gcd(self, o: "UniPoly") -> "UniPoly":
        a, b = self, o
        while b.c:
            a, b = b, a % b
        return a.monic()

    def powmod(self, e: int, m: "UniPoly") -> "UniPoly":
        r = UniPoly(self.ctx, [1]) % m
        a = self % m
        while e:
            if e & 1:
                r = (r * a) % m
            e >>= 1
            if e:
                a = (a * a) % m
        return r

    def map_coeffs(self, target: FieldCtx, f) -> "UniPoly":
        return UniPoly(target, [f(x) for x in self.c])

    def format(self) -> str:
        return ";".join(self.ctx.format(x) for x in self.c) if self.ctx.k > 1 else \
            ",".join(str(x) for x in self.c)


def parse_unipoly(ctx: FieldCtx, text: str) -> UniPoly:
    """"d0,d1,...,dn" over a prime field; for extensions separate the
    coefficients with ';' and write each element as "c0,c1,..."."""
    text = text.strip()
    if ctx.k == 1:
        return UniPoly(ctx, [int(t) % ctx.p for t in text.split(",") if t.strip()])
    return UniPoly(ctx, [ctx.parse(t) for t in text.split(";") if t.strip()])


# ---------------------------------------------------------------------------
# squarefree test and factorization
# ---------------------------------------------------------------------------

def is_squarefree(f: UniPoly) -> bool:
    if f.is_zero():
        raise ValueError("zero polynomial")
    return f.gcd(f.deriv()).deg == 0


def _pth_root(f: UniPoly) -> UniPoly:
    F = f.ctx
    p = F.p
    e = F.k - 1  # c^{p^{k-1}} is the p-th root of c
    return UniPoly(F, [F.frob(f.c[i], e) for i in range(0, len(f.c), p)])


def squarefree_decomposition(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Monic squarefree factors with multiplicities (Musser/Yun in char p)."""
    F = f.ctx
    f = f.monic()
    out: list[tuple[UniPoly, int]] = []
    if f.deg <= 0:
        return out
    d = f.deriv()
    if d.is_zero():
        for g, j in squarefree_decomposition(_pth_root(f)):
            out.append((g, j * F.p))
        return out
    c = f.gcd(d)
    w = f // c
    i = 1
    while w.deg > 0:
        y = w.gcd(c)
        z = w // y
        if z.deg > 0:
            out.append((z.monic(), i))
        i += 1
        w = y
        c = c // y
    if c.deg > 0:
        for g, j in squarefree_decomposition(_pth_root(c.monic())):
            out.append((g, j * F.p))
    return out


def distinct_degree(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Split a monic squarefree f into products of equal-degree factors."""
    F = f.ctx
    out = []
    x = UniPoly.x(F)
    h = x % f if f.deg > 0 else x
    d = 0
    while f.deg >= 2 * (d + 1):
        d += 1
        h = h.powmod(F.q, f)
        g = (h - x).gcd(f)
        if g.deg > 0:
            out.append((g, d))
            f = f // g
            h = h % f
    if f.deg > 0:
        out.append((f.monic(), f.deg))
    return out


def equal_degree(f: UniPoly, d: int, rng: random.Random) -> list[UniPoly]:
    """Cantor-Zassenhaus splitting of a product of degree-d irreducibles."""
    F = f.ctx
    if f.deg == d:
        return [f.monic()]
    e = (F.q ** d - 1) // 2
    while True:
        a = UniPoly(F, [F.random(rng) for _ in range(f.deg)])
        if a.deg <= 0:
            continue
        g = a.gcd(f)
        if 0 < g.deg < f.deg:
            break
        b = a.powmod(e, f) - UniPoly(F, [1])
        g = b.gcd(f)
        if 0 < g.deg < f.deg:
            break
    return equal_degree(g, d, rng) + equal_degree(f // g, d, rng)


def _poly_key(g: UniPoly) -> tuple:
    return (g.deg, list(reversed(g.c)))


def factor_univar(f: UniPoly, seed: int = 0) -> tuple[int, list[tuple[UniPoly, int]]]:
    """(leading coefficient, sorted list of (monic irreducible, multiplicity))."""
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    rng = random.Random(seed)
    lc = f.lc()
    acc: dict[tuple, list] = {}
    for sq, mult in squarefree_decomposition(f):
        for block, d in distinct_degree(sq):
            for g in equal_degree(block, d, rng):
                key = tuple(g.c)
                if key in acc:
                    acc[key][1] += mult
                else:
                    acc[key] = [g, mult]
    facs = sorted(((g, m) for g, m in acc.values()), key=lambda t: _poly_key(t[0]))
    return lc, facs


# ---------------------------------------------------------------------------
# embeddings and roots in extensions
# ---------------------------------------------------------------------------

class Embedding:
    """Field map F_{p^m} -> F_{p^n} sending x to a fixed root of the source modulus."""

    def __init__(self, src: FieldCtx, dst: FieldCtx):
        if src.p != dst.p or dst.k % src.k:
            raise ValueError(f"cannot embed {src} into {dst}")
        self.src, self.dst = src, dst
        if src.k == 1:
            self.image_of_gen = None
            self._table = None
            return
        if src == dst:
            self.image_of_gen = src.gen()
        else:
            m = UniPoly(dst, list(src.modulus))
            roots = _roots_in_own_field(m)
            if not roots:
                raise AssertionError("modulus has no root in target")
            self.image_of_gen = min(roots)
        self._table = None
        if src.q <= 4096:
            self._table = [self._compute(a) for a in range(src.q)]

    def _compute(self, a: int) -> int:
        if self.src.k == 1:
            return a
        D = self.dst
        r = 0
        for c in reversed(self.src.to_coeffs(a)):
            r = D.add(D.mul(r, self.image_of_gen), c)
        return r

    def __call__(self, a: int) -> int:
        if self.src.k == 1:
            return a
        if self._table is not None:
            return self._table[a]
        return self._compute(a)

    def poly(self, f: UniPoly) -> UniPoly:
        return UniPoly(self.dst, [self(c) for c in f.c])


@lru_cache(maxsize=None)
def embedding(src: FieldCtx, dst: FieldCtx) -> Embedding:
    return Embedding(src, dst)


def _roots_in_own_field(f: UniPoly, seed: int = 0) -> list[int]:
    F = f.ctx
    if f.is_zero():
        raise ValueError("zero polynomial has every element as a root")
    f = f.monic()
    if f.deg <= 0:
        return []
    x = UniPoly.x(F)
    g = (x.powmod(F.q, f) - x).gcd(f)
    if g.deg <= 0:
        return []
    rng = random.Random(seed)
    lin = equal_degree(g, 1, rng)
    return sorted(F.neg(h.c[0]) for h in lin)


def roots_in_ext(f: UniPoly, target: FieldCtx, seed: int = 0) -> list[int]:
    """Distinct roots of f lying in target, as sorted codes of target."""
    if f.ctx != target:
        f = embedding(f.ctx, target).poly(f)
    return _roots_in_own_field(f, seed)


def lagrange_interpolate(ctx: FieldCtx, nodes: Sequence[tuple[int, int]], bound: int) -> UniPoly:
    """Unique polynomial of degree <= bound through the nodes (Newton form)."""
    xs = [x for x, _ in nodes]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate interpolation nodes")
    if len(nodes) < bound + 1:
        raise ValueError(f"need {bound + 1} nodes, got {len(nodes)}")
    F = ctx
    n = len(nodes)
    coef = [y for _, y in nodes]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = F.div(F.sub(coef[i], coef[i - 1]), F.sub(xs[i], xs[i - j]))
    poly = UniPoly(F, [coef[-1]])
    for i in range(n - 2, -1, -1):
        poly = poly * UniPoly(F, [F.neg(xs[i]), 1]) + UniPoly(F, [coef[i]])
    if poly.deg > bound:
        raise ValueError(f"nodes are not interpolated by a polynomial of degree <= {bound}")
    return poly
