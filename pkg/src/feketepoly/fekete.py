"""Construction of generalized Fekete polynomials and their compact forms.

For a fundamental discriminant delta with conductor D, the raw polynomial
has coefficient chi(a) at x**a for a < D. For even delta the odd-index
coefficients are repackaged into a half-size polynomial. Dividing out the
proven cyclotomic content (family-specific closed forms for 4p, -4p, 3p,
-3p) yields the compact polynomial f and its trace polynomial g.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ntheory import Family, QuadDisc, kronecker
from .cyclotomic import MultiplicityReport, cyclotomic_poly, strip_cyclotomic
from .zpoly import IntPoly, exact_div, trace_polynomial


class FeketeDivisionError(ArithmeticError):
    """An expected exact cyclotomic division failed for some discriminant."""

    def __init__(self, delta: int, n: int):
        super().__init__(f"Phi_{n} does not divide as expected for delta={delta}")
        self.delta = delta
        self.n = n


@dataclass(frozen=True)
class FeketeBundle:
    disc: QuadDisc
    F: IntPoly
    F_tilde: IntPoly | None
    f: IntPoly
    g: IntPoly
    removed: MultiplicityReport
    sign: int
    conjectural: bool = False

    def to_json(self) -> dict:
        return {
            "delta": self.disc.delta,
            "D": self.disc.conductor,
            "family": self.disc.family.value,
            "p": self.disc.p,
            "F": self.F.to_json(),
            "F_tilde": self.F_tilde.to_json() if self.F_tilde is not None else None,
            "f": self.f.to_json(),
            "g": self.g.to_json(),
            "removed": self.removed.to_json(),
            "sign": self.sign,
            "conjectural": self.conjectural,
        }


def fekete_raw(d: QuadDisc) -> IntPoly:
    """Sum of chi(a) * x**a over 1 <= a <= D-1; degree D-1, coefficients in {-1,0,1}."""
    delta, D = d.delta, d.conductor
    return IntPoly([0] + [kronecker(delta, a) for a in range(1, D)])


def fekete_modified(d: QuadDisc) -> IntPoly:
    """Half-size polynomial for even delta: F(x) = x * F_tilde(x**2)."""
    if d.delta % 2 != 0:
        raise ValueError("modified polynomial is defined for even discriminants only")
    delta, D = d.delta, d.conductor
    return IntPoly([kronecker(delta, 2 * a + 1) for a in range(D // 2)])


def _family_denominator(d: QuadDisc) -> list[int]:
    """Cyclotomic indices (with repetition) divided out of the family source."""
    p = d.p
    if d.family is Family.FOUR_P:
        if p % 8 == 7:
            return [1, 1, 2, 2, 2, 6, p]
        return [1, 1, 2, p]
    if d.family is Family.MINUS_FOUR_P:
        if p % 8 == 5:
            return [1, 2, 2, 6, p]
        return [1, 2, 2, p]
    if d.family is Family.THREE_P:
        if p % 3 == 2:
            return [1, 1, 2, 3, 3, 6, p]
        return [1, 1, 2, 3, p]
    if d.family is Family.MINUS_THREE_P:
        return [1, 3, p]
    raise ValueError(f"no compact formula for family {d.family}")


def expected_compact_degree(d: QuadDisc) -> int:
    """Degree of the compact polynomial predicted by the family closed form."""
    p = d.p
    if d.family is Family.FOUR_P:
        return p - 7 if p % 8 == 7 else p - 3
    if d.family is Family.MINUS_FOUR_P:
        return p - 5 if p % 8 == 5 else p - 3
    if d.family is Family.THREE_P:
        return 2 * (p - 5) if p % 3 == 2 else 2 * (p - 3)
    if d.family is Family.MINUS_THREE_P:
        return 2 * (p - 2)
    raise ValueError(f"no degree formula for family {d.family}")


def fekete_compact(d: QuadDisc, cyclo_bound: int | None = None) -> FeketeBundle:
    """Build the full bundle: raw polynomial, compact f, trace g, strip report.

    For the four p-families f is obtained from the family formula; the sign
    is normalized so that f is monic with positive leading coefficient and
    the applied sign is recorded. For any other fundamental discriminant f
    falls back to the residual of the cyclotomic strip and is flagged
    conjectural.
    """
    F = fekete_raw(d)
    even = d.delta % 2 == 0
    F_tilde = fekete_modified(d) if even else None
    removed = strip_cyclotomic(F, cyclo_bound)
    source = F_tilde if even else IntPoly(F.coeffs[1:])
    if d.family in (Family.FOUR_P, Family.MINUS_FOUR_P, Family.THREE_P, Family.MINUS_THREE_P):
        quotient = source
        for n in _family_denominator(d):
            q = exact_div(quotient, cyclotomic_poly(n))
            if q is None:
                raise FeketeDivisionError(d.delta, n)
            quotient = q
        conjectural = False
    else:
        quotient = strip_cyclotomic(source).residual if even else removed.residual
        conjectural = True
    sign = 1 if quotient.lc > 0 else -1
    f = quotient if sign == 1 else -quotient
    g = trace_polynomial(f) if f.degree % 2 == 0 and f.is_reciprocal() else IntPoly()
    return FeketeBundle(
        disc=d,
        F=F,
        F_tilde=F_tilde,
        f=f,
        g=g,
        removed=removed,
        sign=sign,
        conjectural=conjectural,
    )


def fekete_trace(bundle: FeketeBundle) -> IntPoly:
    """Trace polynomial of the bundle's compact polynomial."""
    return trace_polynomial(bundle.f)
