"""Exact dense polynomial arithmetic over the integers.

A polynomial is a tuple of arbitrary-precision coefficients, low degree
first, with no trailing zeros; the zero polynomial is the empty tuple.

>>> IntPoly([-1, 0, 1]) == IntPoly([-1, 1]) * IntPoly([1, 1])
True
"""

from __future__ import annotations

from typing import Iterable, Optional


class IntPoly:
    """Immutable dense univariate polynomial with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def zero() -> "IntPoly":
        return IntPoly()

    @staticmethod
    def one() -> "IntPoly":
        return IntPoly((1,))

    @staticmethod
    def x() -> "IntPoly":
        return IntPoly((0, 1))

    @staticmethod
    def monomial(k: int, c: int = 1) -> "IntPoly":
        return IntPoly((0,) * k + (c,))

    @staticmethod
    def from_json(data: list) -> "IntPoly":
        return IntPoly(int(c) for c in data)

    def to_json(self) -> list[str]:
        """Coefficients as decimal strings, constant term first."""
        return [str(c) for c in self.coeffs]

    # -- basic queries ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def is_reciprocal(self) -> bool:
        """True iff the coefficient sequence is palindromic."""
        return self.coeffs == self.coeffs[::-1]

    # -- ring operations -------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, c in enumerate(a):
            if c:
                for j, d in enumerate(b):
                    out[i + j] += c * d
        return IntPoly(out)

    __rmul__ = __mul__

    def scale(self, c: int) -> "IntPoly":
        if c == 0:
            return IntPoly()
        return IntPoly(c * a for a in self.coeffs)

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise ValueError("negative polynomial power")
        out = IntPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "IntPoly":
        """Multiply by x**k."""
        if self.is_zero:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def substitute_power(self, k: int) -> "IntPoly":
        """p(x**k)."""
        if k < 1:
            raise ValueError("power must be positive")
        out = [0] * (k * len(self.coeffs))
        for i, c in enumerate(self.coeffs):
            out[k * i] = c
        return IntPoly(out)

    def evaluate(self, x0: int) -> int:
        """Horner evaluation at an integer point."""
        out = 0
        for c in reversed(self.coeffs):
            out = out * x0 + c
        return out

    __call__ = evaluate

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    # -- printing ---------------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            if i == 0:
                term = str(mag)
            else:
                xpow = "x" if i == 1 else f"x^{i}"
                term = xpow if mag == 1 else f"{mag}*{xpow}"
            parts.append(f"{sign} {term}" if parts else f"{sign}{term}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)!r})"


def exact_div(p: IntPoly, q: IntPoly) -> Optional[IntPoly]:
    """Quotient p/q when q divides p exactly over the integers, else None."""
    if q.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero:
        return IntPoly()
    dp, dq = p.degree, q.degree
    if dp < dq:
        return None
    rem = list(p.coeffs)
    qc = q.coeffs
    lead = qc[-1]
    nz = [(j, c) for j, c in enumerate(qc[:-1]) if c]
    out = [0] * (dp - dq + 1)
    for i in range(dp - dq, -1, -1):
        t = rem[i + dq]
        if t == 0:
            continue
        if t % lead:
            return None
        t //= lead
        out[i] = t
        rem[i + dq] = 0
        for j, c in nz:
            rem[i + j] -= t * c
    if any(rem[:dq]):
        return None
    return IntPoly(out)


def trace_polynomial(f: IntPoly) -> IntPoly:
    """The unique g with f(x) = x**n * g(x + 1/x), for reciprocal f of degree 2n.

    Uses the basis v_k with v_k(x + 1/x) = x**k + x**(-k), satisfying
    v_0 = 2, v_1 = t, v_k = t*v_(k-1) - v_(k-2).

    >>> print(trace_polynomial(IntPoly([1, 1, 1, 1, 1])))
    x^2 + x - 1
    """
    if f.degree % 2 != 0:
        raise ValueError("trace polynomial needs even degree")
    if not f.is_reciprocal():
        raise ValueError("trace polynomial needs a reciprocal polynomial")
    if f.is_zero:
        return IntPoly()
    n = f.degree // 2
    g = IntPoly((f.coeff(n),))
    v_prev, v_cur = IntPoly((2,)), IntPoly.x()
    for k in range(1, n + 1):
        c = f.coeff(n + k)
        if c:
            g = g + v_cur.scale(c)
        if k < n:
            v_prev, v_cur = v_cur, IntPoly.x() * v_cur - v_prev
    return g


def expand_trace(g: IntPoly) -> IntPoly:
    """Inverse of trace_polynomial: x**deg(g) * g(x + 1/x) expanded over Z."""
    n = g.degree
    if n < 0:
        return IntPoly()
    # x^n * (x + 1/x)^k = x^(n-k) * (x^2 + 1)^k
    x2p1 = IntPoly((1, 0, 1))
    out = IntPoly()
    for k in range(n + 1):
        c = g.coeff(k)
        if c:
            out = out + (x2p1**k).shift(n - k).scale(c)
    return out


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder: lc(b)**(deg a - deg b + 1) * a reduced modulo b."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - len(b) + 1
    while r and len(r) - 1 >= db:
        t = r[-1]
        d = len(r) - 1 - db
        r = [lb * c for c in r]
        for j in range(db + 1):
            r[d + j] -= t * b[j]
        while r and r[-1] == 0:
            r.pop()
        e -= 1
    if e > 0:
        s = lb**e
        r = [s * c for c in r]
    return r


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Resultant over Z, by the fraction-free subresultant remainder sequence.

    The magnitude comes from the classical subresultant bookkeeping; the
    sign is tracked exactly through the step relation
    Res(A, B) = (-1)**(m*n) * lc(B)**((m-r)-(d+1)*n) * beta**n * Res(B, R/beta)
    with m = deg A, n = deg B, r = deg R, d = m - n, R the pseudo-remainder
    and beta the fraction-free divisor.
    """
    if f.is_zero or g.is_zero:
        return 0
    a, b = list(f.coeffs), list(g.coeffs)
    da, db = len(a) - 1, len(b) - 1
    sign = 1
    if da < db:
        a, b = b, a
        da, db = db, da
        if da & 1 and db & 1:
            sign = -sign
    if db == 0:
        return sign * b[0] ** da
    g_, h_ = 1, 1
    while True:
        delta = da - db
        lb = b[-1]
        r = _prem(a, b)
        if not r:
            return 0
        dr = len(r) - 1
        denom = g_ * h_**delta
        if da & 1 and db & 1:
            sign = -sign
        if lb < 0 and ((da - dr) - (delta + 1) * db) & 1:
            sign = -sign
        if denom < 0 and db & 1:
            sign = -sign
        a, da = b, db
        b = [c // denom for c in r]
        db = dr
        g_ = a[-1]
        if delta:
            h_ = g_**delta // h_ ** (delta - 1)
        if db == 0:
            break
    value = b[0] ** da
    magnitude = abs(value) // abs(h_) ** (da - 1)
    if value < 0:
        sign = -sign
    return sign * magnitude


def discriminant(p: IntPoly) -> int:
    """disc(p) = (-1)**(n(n-1)/2) * Res(p, p') / lc(p), computed exactly."""
    n = p.degree
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    res = resultant(p, p.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    q, r = divmod(sign * res, p.lc)
    if r:
        raise ArithmeticError("resultant not divisible by leading coefficient")
    return q


def disc_sign_factor(f: IntPoly) -> int:
    """s = (-1)**n * f(1) * f(-1) for a reciprocal polynomial of degree 2n."""
    if f.degree % 2 != 0 or not f.is_reciprocal():
        raise ValueError("sign factor needs a reciprocal polynomial of even degree")
    n = f.degree // 2
    s = f.evaluate(1) * f.evaluate(-1)
    return -s if n % 2 else s
