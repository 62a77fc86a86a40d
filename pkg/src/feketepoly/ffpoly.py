"""Polynomial arithmetic and factorization over prime fields F_q (q < 2**32).

Polynomials are dense coefficient lists, low degree first, reduced mod q.
Factor *shapes* (the multiset of degrees of the distinct irreducible
factors of a squarefree polynomial) come from distinct-degree
factorization alone; the full splitting into irreducibles is a separate,
randomized step used only for display.

Internally the hot paths (multiplication, reduction by a monic modulus,
Frobenius maps) switch to vectorized int64 arithmetic when the modulus is
small enough that no intermediate product can overflow.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .ntheory import is_prime
from .zpoly import IntPoly

_NP_Q_LIMIT = 1 << 30  # int64 stays exact: n * (q-1)^2 < 2**63 for all n used
_NP_MIN_LEN = 32


class UnusablePrimeError(ValueError):
    """The reduction mod q drops degree, so q cannot witness any factor shape."""


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _mul(a: list[int], b: list[int], q: int) -> list[int]:
    if not a or not b:
        return []
    if q < _NP_Q_LIMIT and len(a) + len(b) > _NP_MIN_LEN:
        out = np.convolve(np.array(a, dtype=np.int64), np.array(b, dtype=np.int64))
        return _trim((out % q).tolist())
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c:
            for j, d in enumerate(b):
                out[i + j] += c * d
    return _trim([c % q for c in out])


def _rem_monic(a: list[int], f: list[int], q: int) -> list[int]:
    """Remainder of a modulo monic f."""
    df = len(f) - 1
    if len(a) <= df:
        return list(a)
    if q < _NP_Q_LIMIT and len(a) > _NP_MIN_LEN:
        r = np.array(a, dtype=np.int64)
        fv = np.array(f[:-1], dtype=np.int64)
        for i in range(len(r) - 1, df - 1, -1):
            c = int(r[i]) % q
            if c:
                r[i - df : i] -= c * fv
                r[i - df : i] %= q
        return _trim([int(c) % q for c in r[:df]])
    r = list(a)
    nz = [(j, c) for j, c in enumerate(f[:-1]) if c]
    for i in range(len(r) - 1, df - 1, -1):
        c = r[i] % q
        if c:
            for j, fc in nz:
                r[i - df + j] -= c * fc
    return _trim([c % q for c in r[:df]])


def _divmod(a: list[int], b: list[int], q: int) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], list(a)
    inv = pow(b[-1], -1, q)
    r = list(a)
    db = len(b) - 1
    quot = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = r[i] % q
        if c:
            t = c * inv % q
            quot[i - db] = t
            for j in range(db + 1):
                r[i - db + j] -= t * b[j]
            r[i] = 0
    return _trim([c % q for c in quot]), _trim([c % q for c in r[:db]])


def _monic(a: list[int], q: int) -> list[int]:
    if not a or a[-1] == 1:
        return list(a)
    inv = pow(a[-1], -1, q)
    return [c * inv % q for c in a]


def _gcd(a: list[int], b: list[int], q: int) -> list[int]:
    """Monic gcd. Reduction steps use cross-multiplication, no inversions."""
    a = _trim([c % q for c in a])
    b = _trim([c % q for c in b])
    if q < _NP_Q_LIMIT and max(len(a), len(b)) > _NP_MIN_LEN:
        av = np.array(a, dtype=np.int64)
        bv = np.array(b, dtype=np.int64)
        while len(bv):
            if len(av) < len(bv):
                av, bv = bv, av
                continue
            while len(av) >= len(bv):
                la = int(av[-1])
                delta = len(av) - len(bv)
                av = (av * int(bv[-1])) % q
                av[delta:] -= la * bv
                av %= q
                k = len(av)
                while k and av[k - 1] == 0:
                    k -= 1
                av = av[:k]
                if k == 0:
                    break
            av, bv = bv, av
        return _monic([int(c) for c in av], q)
    while b:
        if len(a) < len(b):
            a, b = b, a
            continue
        r = list(a)
        while len(r) >= len(b):
            la, lb = r[-1], b[-1]
            delta = len(r) - len(b)
            r = [lb * c % q for c in r]
            for j, c in enumerate(b):
                r[delta + j] = (r[delta + j] - la * c) % q
            _trim(r)
            if not r:
                break
        a, b = b, r
    return _monic(a, q)


class _Reducer:
    """Remainder arithmetic for one fixed monic modulus.

    When int64 stays exact a (deg x deg) matrix of the rows x**(deg+i) mod f
    turns every reduction of a product into one matrix product.
    """

    __slots__ = ("f", "q", "df", "rows")

    def __init__(self, f: list[int], q: int):
        self.f = f
        self.q = q
        self.df = len(f) - 1
        self.rows = None
        if (
            q < _NP_Q_LIMIT
            and self.df > _NP_MIN_LEN
            and (self.df + 1) * (q - 1) ** 2 < 2**62
        ):
            neg = np.array([(-c) % q for c in f[:-1]], dtype=np.int64)
            rows = np.empty((self.df, self.df), dtype=np.int64)
            cur = neg.copy()
            rows[0] = cur
            for i in range(1, self.df):
                top = int(cur[-1])
                nxt = np.empty(self.df, dtype=np.int64)
                nxt[0] = 0
                nxt[1:] = cur[:-1]
                if top:
                    nxt = (nxt + top * neg) % q
                rows[i] = nxt
                cur = nxt
            self.rows = rows

    def rem(self, a: list[int]) -> list[int]:
        if len(a) <= self.df:
            return list(a)
        if self.rows is not None and len(a) - self.df <= self.df:
            arr = np.array(a, dtype=np.int64)
            out = (arr[: self.df] + arr[self.df :] @ self.rows[: len(a) - self.df]) % self.q
            return _trim([int(c) for c in out])
        return _rem_monic(a, self.f, self.q)

    def mulmod(self, a: list[int], b: list[int]) -> list[int]:
        return self.rem(_mul(a, b, self.q))

    def pow_x(self, e: int) -> list[int]:
        """x**e modulo the modulus, squaring from the top bit of e."""
        if e < self.df:
            return [0] * e + [1]
        result = [1]
        for bit in bin(e)[2:]:
            result = self.mulmod(result, result)
            if bit == "1":
                result = self.rem([0] + result)
        return result


def _pow_mod(a: list[int], e: int, f: list[int], q: int) -> list[int]:
    """a**e modulo monic f, by square and multiply."""
    red = _Reducer(f, q)
    result = [1]
    base = red.rem(a)
    while e:
        if e & 1:
            result = red.mulmod(result, base)
        e >>= 1
        if e:
            base = red.mulmod(base, base)
    return result


class _FrobeniusTable:
    """x**(q*i) mod f for 0 <= i < deg f, applied as one linear map.

    Valid for reductions modulo any divisor of f as well, since congruence
    mod f refines congruence mod the divisor.
    """

    __slots__ = ("red", "base", "matrix")

    def __init__(self, red: _Reducer):
        self.red = red
        n = red.df
        xq = red.pow_x(red.q)
        self.base = [[1], xq]
        cur = xq
        for _ in range(2, n):
            cur = red.mulmod(cur, xq)
            self.base.append(cur)
        self.base = self.base[:n]
        self.matrix = None
        if red.rows is not None:
            mat = np.zeros((n, n), dtype=np.int64)
            for i, row in enumerate(self.base):
                mat[i, : len(row)] = row
            self.matrix = mat

    def apply(self, g: list[int]) -> list[int]:
        """g(x)**q modulo f for g of degree < deg f."""
        if not g:
            return []
        if self.matrix is not None:
            vec = np.array(g, dtype=np.int64)
            out = (vec @ self.matrix[: len(g)]) % self.red.q
            return _trim([int(c) for c in out])
        out = [0] * self.red.df
        for i, gi in enumerate(g):
            if gi:
                for j, c in enumerate(self.base[i]):
                    out[j] += gi * c
        return _trim([c % self.red.q for c in out])


class ModPoly:
    """Dense polynomial over F_q, q prime, coefficients reduced to [0, q)."""

    __slots__ = ("q", "coeffs")

    def __init__(self, q: int, coeffs=()):
        if not 2 <= q < 2**32:
            raise ValueError("modulus must satisfy 2 <= q < 2**32")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "coeffs", tuple(_trim([c % q for c in coeffs])))

    def __setattr__(self, name, value):
        raise AttributeError("ModPoly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def _check(self, other: "ModPoly") -> None:
        if self.q != other.q:
            raise ValueError("modulus mismatch")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ModPoly) and self.q == other.q and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.q, self.coeffs))

    def __add__(self, other: "ModPoly") -> "ModPoly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return ModPoly(self.q, out)

    def __sub__(self, other: "ModPoly") -> "ModPoly":
        self._check(other)
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return ModPoly(self.q, out)

    def __mul__(self, other: "ModPoly") -> "ModPoly":
        self._check(other)
        return ModPoly(self.q, _mul(list(self.coeffs), list(other.coeffs), self.q))

    def __divmod__(self, other: "ModPoly") -> tuple["ModPoly", "ModPoly"]:
        self._check(other)
        quot, rem = _divmod(list(self.coeffs), list(other.coeffs), self.q)
        return ModPoly(self.q, quot), ModPoly(self.q, rem)

    def __floordiv__(self, other: "ModPoly") -> "ModPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "ModPoly") -> "ModPoly":
        return divmod(self, other)[1]

    def monic(self) -> "ModPoly":
        return ModPoly(self.q, _monic(list(self.coeffs), self.q))

    def derivative(self) -> "ModPoly":
        return ModPoly(self.q, [i * c for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, x0: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = (out * x0 + c) % self.q
        return out

    def __str__(self) -> str:
        return str(IntPoly(self.coeffs)) + f" (mod {self.q})"

    def __repr__(self) -> str:
        return f"ModPoly({self.q}, {list(self.coeffs)!r})"


def reduce_poly(p: IntPoly, q: int) -> ModPoly:
    """Coefficient-wise reduction of an integer polynomial mod a prime q."""
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    return ModPoly(q, [c % q for c in p.coeffs])


def gcd_mod(a: ModPoly, b: ModPoly) -> ModPoly:
    """Monic gcd over F_q; gcd(a, 0) is monic(a) and gcd(0, 0) = 0."""
    a._check(b)
    return ModPoly(a.q, _gcd(list(a.coeffs), list(b.coeffs), a.q))


def pow_mod(a: ModPoly, e: int, modulus: ModPoly) -> ModPoly:
    a._check(modulus)
    f = _monic(list(modulus.coeffs), modulus.q)
    return ModPoly(a.q, _pow_mod(list(a.coeffs), e, f, a.q))


@dataclass(frozen=True)
class FactorShape:
    """Degrees of the distinct irreducible factors of a squarefree reduction."""

    squarefree: bool
    degrees: dict[int, int] = field(default_factory=dict)

    def total(self) -> int:
        return sum(d * c for d, c in self.degrees.items())

    def to_json(self) -> dict:
        return {
            "squarefree": self.squarefree,
            "degrees": {str(d): c for d, c in sorted(self.degrees.items())},
        }


def is_squarefree_mod(f: ModPoly) -> bool:
    d = f.derivative()
    if d.is_zero:
        return f.degree < 1
    return gcd_mod(f, d).degree == 0


def distinct_degree_factorization(f: ModPoly) -> list[tuple[int, ModPoly]]:
    """Distinct-degree split of a squarefree monic f: [(d, product of the
    irreducible factors of degree d)], in increasing d, trivial parts omitted.

    The Frobenius table is built once for f and reused after factors split
    off, with intermediate values reduced modulo the shrinking cofactor.
    """
    q = f.q
    if f.degree < 1:
        raise ValueError("distinct-degree factorization needs degree >= 1")
    if f.lc != 1:
        raise ValueError("input must be monic")
    if not is_squarefree_mod(f):
        raise ValueError("input must be squarefree")
    table = _FrobeniusTable(_Reducer(list(f.coeffs), q))
    fstar = list(f.coeffs)
    out: list[tuple[int, ModPoly]] = []
    h = _rem_monic([0, 1], fstar, q)
    d = 0
    while len(fstar) - 1 >= 2 * (d + 1):
        d += 1
        h = _rem_monic(table.apply(h), fstar, q)
        hx = list(h)
        if len(hx) < 2:
            hx = hx + [0] * (2 - len(hx))
        hx[1] = (hx[1] - 1) % q
        g = _gcd(fstar, _trim(hx), q)
        if len(g) > 1:
            out.append((d, ModPoly(q, g)))
            fstar, r = _divmod(fstar, g, q)
            assert not r
            if len(fstar) - 1 == 0:
                break
            h = _rem_monic(h, fstar, q)
    if len(fstar) - 1 > 0:
        out.append((len(fstar) - 1, ModPoly(q, fstar)))
    return out


def factor_shape(p: IntPoly, q: int) -> FactorShape:
    """Shape of p mod q: squarefree flag, and the degree multiset when squarefree.

    Primes dividing the leading coefficient drop the degree and are rejected.
    """
    fq = reduce_poly(p, q)
    if fq.degree != p.degree:
        raise UnusablePrimeError(f"degree drops mod {q}")
    if fq.degree < 1:
        return FactorShape(squarefree=True, degrees={})
    fq = fq.monic()
    if not is_squarefree_mod(fq):
        return FactorShape(squarefree=False, degrees={})
    counts = Counter()
    for d, part in distinct_degree_factorization(fq):
        counts[d] = part.degree // d
    return FactorShape(squarefree=True, degrees=dict(counts))


def equal_degree_factorization(
    part: ModPoly, d: int, rng: random.Random | None = None
) -> list[ModPoly]:
    """Cantor-Zassenhaus splitting of a product of distinct irreducibles of
    degree d over F_q with q odd. Randomized but always terminating; pass a
    seeded rng for reproducible output order."""
    q = part.q
    if q == 2:
        raise ValueError("equal-degree splitting implemented for odd q only")
    if part.degree % d:
        raise ValueError("degree is not a multiple of d")
    rng = rng or random.Random(0)
    part = part.monic()
    if part.degree == d:
        return [part]
    exponent = (q**d - 1) // 2
    f = list(part.coeffs)
    n = part.degree

    def split(target: list[int]) -> list[list[int]]:
        deg_t = len(target) - 1
        if deg_t == d:
            return [target]
        while True:
            a = [rng.randrange(q) for _ in range(deg_t)]
            a = _trim(a)
            if len(a) < 2:
                continue
            g = _gcd(target, a, q)
            if 0 < len(g) - 1 < deg_t:
                pass
            else:
                b = _pow_mod(a, exponent, target, q)
                b = list(b)
                if not b:
                    continue
                b[0] = (b[0] - 1) % q
                g = _gcd(target, _trim(b), q)
                if not 0 < len(g) - 1 < deg_t:
                    continue
            quot, rem = _divmod(target, g, q)
            assert not rem
            return split(g) + split(_monic(quot, q))

    pieces = split(_monic(f, q))
    return sorted((ModPoly(q, piece) for piece in pieces), key=lambda m: m.coeffs)


def factor_mod(p: IntPoly, q: int, rng: random.Random | None = None) -> list[ModPoly]:
    """Full list of monic irreducible factors of a squarefree reduction of p."""
    shape = factor_shape(p, q)
    if not shape.squarefree:
        raise ValueError(f"reduction mod {q} is not squarefree")
    fq = reduce_poly(p, q).monic()
    if fq.degree < 1:
        return []
    out: list[ModPoly] = []
    for d, part in distinct_degree_factorization(fq):
        if part.degree == d:
            out.append(part)
        else:
            out.extend(equal_degree_factorization(part, d, rng))
    return sorted(out, key=lambda m: (m.degree, m.coeffs))
