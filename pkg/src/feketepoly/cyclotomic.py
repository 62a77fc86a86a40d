"""Cyclotomic polynomials and exact cyclotomic content of integer polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .ntheory import QuadDisc, Family, divisors, euler_phi, moebius
from .zpoly import IntPoly, exact_div


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial, monic of degree phi(n).

    Computed by dividing x**n - 1 by the cyclotomic polynomials of the
    proper divisors of n; every division is exact over the integers.
    """
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    poly = IntPoly((-1,) + (0,) * (n - 1) + (1,))
    for d in divisors(n):
        if d == n:
            continue
        q = exact_div(poly, cyclotomic_poly(d))
        assert q is not None
        poly = q
    return poly


@lru_cache(maxsize=None)
def cyclotomic_value(n: int, m: int) -> int:
    """Phi_n(m) for an integer m >= 2, via Moebius inversion of m**d - 1.

    Avoids constructing Phi_n; used to pre-screen divisibility candidates.
    """
    if m < 2:
        raise ValueError("evaluation point must be >= 2")
    num = den = 1
    for d in divisors(n):
        mu = moebius(n // d)
        if mu == 1:
            num *= m**d - 1
        elif mu == -1:
            den *= m**d - 1
    return num // den


def multiplicity(F: IntPoly, n: int) -> int:
    """Largest r with Phi_n**r dividing F, by repeated exact division."""
    if F.is_zero:
        raise ValueError("multiplicity of the zero polynomial is undefined")
    phi_n = cyclotomic_poly(n)
    r = 0
    cof = F
    while True:
        q = exact_div(cof, phi_n)
        if q is None:
            return r
        cof = q
        r += 1


@dataclass(frozen=True)
class MultiplicityReport:
    """Exact decomposition input = x**v * prod Phi_n**r * residual."""

    v: int
    entries: dict[int, int]
    residual: IntPoly

    def to_json(self) -> dict:
        return {
            "v": self.v,
            "factors": [{"n": n, "r": r} for n, r in sorted(self.entries.items())],
            "residual": self.residual.to_json(),
        }

    @staticmethod
    def from_json(data: dict) -> "MultiplicityReport":
        return MultiplicityReport(
            v=int(data["v"]),
            entries={int(e["n"]): int(e["r"]) for e in data["factors"]},
            residual=IntPoly.from_json(data["residual"]),
        )

    def reconstruct(self) -> IntPoly:
        out = self.residual.shift(self.v)
        for n, r in self.entries.items():
            out = out * cyclotomic_poly(n) ** r
        return out


def strip_cyclotomic(F: IntPoly, candidate_bound: int | None = None) -> MultiplicityReport:
    """Remove x**v and every cyclotomic factor Phi_n with n <= candidate_bound.

    The default bound is 3 * (deg F + 1), wide enough to cover all indices
    that occur for the discriminant families handled here. Candidates are
    screened by the necessary conditions Phi_n(2) | cofactor(2) and
    Phi_n(3) | cofactor(3) before any exact division is attempted.
    """
    if F.is_zero:
        raise ValueError("cannot strip the zero polynomial")
    if candidate_bound is None:
        candidate_bound = 3 * (F.degree + 1)
    v = 0
    while F.coeff(v) == 0:
        v += 1
    cof = IntPoly(F.coeffs[v:])
    entries: dict[int, int] = {}
    val2, val3 = cof.evaluate(2), cof.evaluate(3)
    for n in range(1, candidate_bound + 1):
        deg = cof.degree
        if deg == 0:
            break
        if euler_phi(n) > deg:
            continue
        if val2 and val3:
            if val2 % cyclotomic_value(n, 2) or val3 % cyclotomic_value(n, 3):
                continue
        r = 0
        phi_n = cyclotomic_poly(n)
        while True:
            q = exact_div(cof, phi_n)
            if q is None:
                break
            cof = q
            r += 1
        if r:
            entries[n] = r
            val2, val3 = cof.evaluate(2), cof.evaluate(3)
    return MultiplicityReport(v=v, entries=entries, residual=cof)


def predicted_multiplicities(d: QuadDisc) -> dict[int, int]:
    """Proven multiplicities of Phi_n in the raw character polynomial of d.

    Returns the closed forms that hold for the discriminant's family,
    including proven zeros. For discriminants outside the four p-families
    only the generic entries (Phi_1, Phi_2 where settled, and Phi_D = 0)
    are returned.
    """
    delta, D, p = d.delta, d.conductor, d.p
    r1 = 2 if delta > 0 else 1
    out: dict[int, int] = {1: r1, D: 0}
    if delta % 2 == 0:
        out[2] = r1
    else:
        out[2] = 1 if delta > 0 else 0
    if d.family is Family.FOUR_P:
        out[4] = 3 if p % 8 == 7 else 1
        out[12] = 1 if p % 8 == 7 else 0
        out[p] = 1
        out[2 * p] = 1
    elif d.family is Family.MINUS_FOUR_P:
        out[4] = 2
        out[12] = 1 if p % 8 == 5 else 0
        out[p] = 1
        out[2 * p] = 1
    elif d.family is Family.THREE_P:
        out[3] = 2 if p % 3 == 2 else 1
        out[6] = 1 if p % 3 == 2 else 0
        out[p] = 1
    elif d.family is Family.MINUS_THREE_P:
        out[3] = 1
        out[p] = 1
    return out
