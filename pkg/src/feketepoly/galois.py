"""Galois group certification through factorization shapes mod primes.

A squarefree factorization shape mod q is the cycle type of a Frobenius
element. Specific combinations of shapes force the Galois group of a
monic integer polynomial:

  * a triple of shapes (irreducible; linear times irreducible; one
    quadratic times distinct odd degrees) forces the full symmetric group;
  * for a reciprocal polynomial of degree 2n whose trace polynomial has
    group S_n, one shape (quadratic times distinct odd) forces the full
    group of signed permutations (Z/2)^n x S_n, and one shape (quadratic
    times quartic times distinct odd) pins the group between the
    even-sign-vector kernel subgroup and the full group, decided by
    whether disc(f) is a perfect square;
  * a quadruple of shapes certifies the full signed group directly.

Witness searches scan primes in increasing order, skipping primes where
the reduction drops degree or is not squarefree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional

from .ntheory import integer_sqrt, primes_up_to
from .zpoly import IntPoly, disc_sign_factor, discriminant, trace_polynomial
from .ffpoly import FactorShape, UnusablePrimeError, factor_shape


class VerificationError(RuntimeError):
    """Two independent routes to the same fact disagree; a bug, not an input error."""


class ShapePattern(Enum):
    IRREDUCIBLE = "irreducible"
    TWO_DISTINCT_LINEAR_TIMES_IRREDUCIBLE = "two_linear_times_irreducible"
    LINEAR_TIMES_IRREDUCIBLE = "linear_times_irreducible"
    QUAD_TIMES_DISTINCT_ODD = "quad_times_distinct_odd"
    QUART_TIMES_DISTINCT_ODD = "quart_times_distinct_odd"
    QUAD_PLUS_QUART_PLUS_DISTINCT_ODD = "quad_plus_quart_plus_distinct_odd"


def match_pattern(shape: FactorShape, total_degree: int, pattern: ShapePattern) -> bool:
    """Decide whether a squarefree shape matches a pattern; non-squarefree
    shapes match nothing."""
    if not shape.squarefree:
        return False
    deg = shape.degrees
    if pattern is ShapePattern.IRREDUCIBLE:
        return deg == {total_degree: 1}
    if pattern is ShapePattern.TWO_DISTINCT_LINEAR_TIMES_IRREDUCIBLE:
        return total_degree >= 4 and deg == {1: 2, total_degree - 2: 1}
    if pattern is ShapePattern.LINEAR_TIMES_IRREDUCIBLE:
        if total_degree == 2:
            return deg == {1: 2}
        return deg == {1: 1, total_degree - 1: 1}
    if pattern is ShapePattern.QUAD_TIMES_DISTINCT_ODD:
        return deg.get(2) == 1 and all(d % 2 or d == 2 for d in deg)
    if pattern is ShapePattern.QUART_TIMES_DISTINCT_ODD:
        return deg.get(4) == 1 and all(d % 2 or d == 4 for d in deg)
    if pattern is ShapePattern.QUAD_PLUS_QUART_PLUS_DISTINCT_ODD:
        return (
            deg.get(2) == 1
            and deg.get(4) == 1
            and all(d % 2 or d in (2, 4) for d in deg)
        )
    raise ValueError(f"unknown pattern {pattern}")


TRIPLE_PATTERNS = (
    ShapePattern.IRREDUCIBLE,
    ShapePattern.LINEAR_TIMES_IRREDUCIBLE,
    ShapePattern.QUAD_TIMES_DISTINCT_ODD,
)

QUADRUPLE_PATTERNS = (
    ShapePattern.IRREDUCIBLE,
    ShapePattern.TWO_DISTINCT_LINEAR_TIMES_IRREDUCIBLE,
    ShapePattern.QUAD_TIMES_DISTINCT_ODD,
    ShapePattern.QUART_TIMES_DISTINCT_ODD,
)


class Target(Enum):
    SYMMETRIC_ON_TRACE = "symmetric_on_trace"
    FULL_HYPEROCTAHEDRAL = "full_hyperoctahedral"
    KERNEL_HYPEROCTAHEDRAL = "kernel_hyperoctahedral"


@dataclass(frozen=True)
class Witness:
    q: int
    pattern: ShapePattern
    shape: FactorShape

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "pattern": self.pattern.value,
            "degrees": {str(d): c for d, c in sorted(self.shape.degrees.items())},
        }


@dataclass(frozen=True)
class GaloisCertificate:
    target: Target
    degree: int
    witnesses: tuple[Witness, ...]
    bound: int
    concluded_group: str
    disc_square: Optional[bool] = None
    disc_s: Optional[int] = None
    disc_sqrt: Optional[int] = None
    trace_certificate: Optional["GaloisCertificate"] = None

    def to_json(self) -> dict:
        out = {
            "target": self.target.value,
            "degree": self.degree,
            "witnesses": [w.to_json() for w in self.witnesses],
            "bound": self.bound,
            "group": self.concluded_group,
        }
        if self.disc_square is not None:
            disc = {"square": self.disc_square, "s": self.disc_s}
            if self.disc_square:
                disc["sqrt_s"] = self.disc_sqrt
            out["disc"] = disc
        if self.trace_certificate is not None:
            out["trace_certificate"] = self.trace_certificate.to_json()
        return out


def iter_usable_shapes(p: IntPoly, bound: int) -> Iterator[tuple[int, FactorShape]]:
    """Yield (q, shape) for primes q <= bound in increasing order, skipping
    degree drops; non-squarefree shapes are yielded for the caller to skip."""
    for q in primes_up_to(bound):
        try:
            yield q, factor_shape(p, q)
        except UnusablePrimeError:
            continue


def find_smallest_witness(
    p: IntPoly, pattern: ShapePattern, bound: int
) -> Optional[tuple[int, FactorShape]]:
    """Least prime q <= bound whose squarefree shape matches the pattern."""
    if p.degree < 1:
        raise ValueError("witness search needs a nonconstant polynomial")
    for q, shape in iter_usable_shapes(p, bound):
        if match_pattern(shape, p.degree, pattern):
            return q, shape
    return None


def find_slotwise_witnesses(
    p: IntPoly, patterns: tuple[ShapePattern, ...], bound: int
) -> list[Optional[Witness]]:
    """One scan recording, for every pattern slot, the smallest matching prime."""
    if p.degree < 1:
        raise ValueError("witness search needs a nonconstant polynomial")
    found: list[Optional[Witness]] = [None] * len(patterns)
    remaining = len(patterns)
    for q, shape in iter_usable_shapes(p, bound):
        if not shape.squarefree:
            continue
        for i, pattern in enumerate(patterns):
            if found[i] is None and match_pattern(shape, p.degree, pattern):
                found[i] = Witness(q=q, pattern=pattern, shape=shape)
                remaining -= 1
        if not remaining:
            break
    return found


def find_joint_witnesses(
    p: IntPoly, patterns: tuple[ShapePattern, ...], bound: int
) -> list[Optional[Witness]]:
    """Assignment of distinct primes to all slots minimizing the largest prime
    (ties broken lexicographically). Coincides with the slotwise answer when
    the slot patterns are mutually exclusive."""
    matched: list[list[Witness]] = [[] for _ in patterns]
    for q, shape in iter_usable_shapes(p, bound):
        if not shape.squarefree:
            continue
        progressed = False
        for i, pattern in enumerate(patterns):
            # an optimal distinct assignment never reaches past the first
            # len(patterns)+1 candidates of any slot
            if len(matched[i]) <= len(patterns) and match_pattern(
                shape, p.degree, pattern
            ):
                matched[i].append(Witness(q=q, pattern=pattern, shape=shape))
                progressed = True
        if not progressed or any(not m for m in matched):
            continue
        best = None
        for combo in itertools.product(*matched):
            qs = [w.q for w in combo]
            if len(set(qs)) < len(qs):
                continue
            key = (max(qs), qs)
            if best is None or key < best[0]:
                best = (key, combo)
        if best is not None:
            return list(best[1])
    return [None] * len(patterns)


def disc_is_square(f: IntPoly) -> tuple[bool, int, str]:
    """Whether disc(f) is a perfect square, by every applicable route.

    For reciprocal f of even degree 2n the value s = (-1)**n f(1) f(-1)
    satisfies disc(f) = s * disc(g)**2 with g the trace polynomial, so
    squareness of disc(f) equals squareness of s whenever disc(g) != 0.
    The full resultant route always runs; if both apply they must agree.
    Returns (square, s or disc, route).
    """
    d = discriminant(f)
    if d == 0:
        raise ValueError("discriminant is zero")
    full_square = d > 0 and integer_sqrt(d)[1]
    if f.degree % 2 == 0 and f.degree > 0 and f.is_reciprocal():
        s = disc_sign_factor(f)
        g = trace_polynomial(f)
        disc_g = discriminant(g) if g.degree >= 1 else 0
        if disc_g != 0:
            s_square = s > 0 and integer_sqrt(s)[1]
            if s_square != full_square:
                raise VerificationError(
                    f"square verdicts disagree: s={s}, disc={d}"
                )
            return full_square, s, "both"
        return full_square, s, "full_resultant"
    return full_square, d, "full_resultant"


def _group_label(target: Target, n: int) -> str:
    if target is Target.SYMMETRIC_ON_TRACE:
        return f"S({n})"
    if target is Target.FULL_HYPEROCTAHEDRAL:
        return f"hyperoctahedral({n})"
    return f"ker_sign_hyperoctahedral({n})"


def certify_trace_symmetric(g: IntPoly, bound: int = 100_000) -> Optional[GaloisCertificate]:
    """Certificate that the Galois group of g is the full symmetric group,
    from the triple of shapes (irreducible, linear*irreducible, quad*odd)."""
    if not g.is_monic:
        raise ValueError("certification needs a monic polynomial")
    witnesses = find_slotwise_witnesses(g, TRIPLE_PATTERNS, bound)
    if any(w is None for w in witnesses):
        return None
    return GaloisCertificate(
        target=Target.SYMMETRIC_ON_TRACE,
        degree=g.degree,
        witnesses=tuple(witnesses),
        bound=bound,
        concluded_group=_group_label(Target.SYMMETRIC_ON_TRACE, g.degree),
    )


def trace_certificate_from_primes(
    g: IntPoly, primes: tuple[int, int, int]
) -> GaloisCertificate:
    """Assemble a symmetric-group certificate from externally supplied
    witness primes, validating each shape against its slot pattern."""
    if not g.is_monic:
        raise ValueError("certification needs a monic polynomial")
    witnesses = []
    for q, pattern in zip(primes, TRIPLE_PATTERNS):
        shape = factor_shape(g, q)
        if not match_pattern(shape, g.degree, pattern):
            raise VerificationError(f"q={q} does not satisfy {pattern.value}")
        witnesses.append(Witness(q=q, pattern=pattern, shape=shape))
    return GaloisCertificate(
        target=Target.SYMMETRIC_ON_TRACE,
        degree=g.degree,
        witnesses=tuple(witnesses),
        bound=max(primes),
        concluded_group=_group_label(Target.SYMMETRIC_ON_TRACE, g.degree),
    )


def _check_reciprocal_even(f: IntPoly) -> int:
    if not f.is_monic or f.degree % 2 or not f.is_reciprocal():
        raise ValueError("needs a monic reciprocal polynomial of even degree")
    return f.degree // 2


def certify_full_quadruple(f: IntPoly, bound: int = 100_000) -> Optional[GaloisCertificate]:
    """Certificate that the group of reciprocal f of degree 2n is the full
    signed permutation group, from a quadruple of shapes."""
    n = _check_reciprocal_even(f)
    witnesses = find_slotwise_witnesses(f, QUADRUPLE_PATTERNS, bound)
    if any(w is None for w in witnesses):
        return None
    return GaloisCertificate(
        target=Target.FULL_HYPEROCTAHEDRAL,
        degree=f.degree,
        witnesses=tuple(witnesses),
        bound=bound,
        concluded_group=_group_label(Target.FULL_HYPEROCTAHEDRAL, n),
    )


def _require_trace_cert(f: IntPoly, n: int, g_cert: GaloisCertificate) -> None:
    if g_cert is None or g_cert.target is not Target.SYMMETRIC_ON_TRACE:
        raise ValueError("a symmetric-group certificate for the trace polynomial is required")
    if g_cert.degree != n:
        raise ValueError("trace certificate degree does not match the polynomial")


def certify_full_2cycle(
    f: IntPoly, g_cert: GaloisCertificate, bound: int = 100_000
) -> Optional[GaloisCertificate]:
    """Full signed group from the trace group S_n plus one quad*odd shape,
    which exhibits a 2-cycle."""
    n = _check_reciprocal_even(f)
    _require_trace_cert(f, n, g_cert)
    hit = find_smallest_witness(f, ShapePattern.QUAD_TIMES_DISTINCT_ODD, bound)
    if hit is None:
        return None
    q, shape = hit
    return GaloisCertificate(
        target=Target.FULL_HYPEROCTAHEDRAL,
        degree=f.degree,
        witnesses=(Witness(q, ShapePattern.QUAD_TIMES_DISTINCT_ODD, shape),),
        bound=bound,
        concluded_group=_group_label(Target.FULL_HYPEROCTAHEDRAL, n),
        trace_certificate=g_cert,
    )


def certify_kernel(
    f: IntPoly, g_cert: GaloisCertificate, bound: int = 100_000
) -> Optional[GaloisCertificate]:
    """Group from the trace group S_n plus one quad*quart*odd shape: the
    even-sign-vector kernel subgroup when disc(f) is a perfect square, the
    full signed group otherwise."""
    n = _check_reciprocal_even(f)
    _require_trace_cert(f, n, g_cert)
    hit = find_smallest_witness(f, ShapePattern.QUAD_PLUS_QUART_PLUS_DISTINCT_ODD, bound)
    if hit is None:
        return None
    q, shape = hit
    square, s, _via = disc_is_square(f)
    target = Target.KERNEL_HYPEROCTAHEDRAL if square else Target.FULL_HYPEROCTAHEDRAL
    return GaloisCertificate(
        target=target,
        degree=f.degree,
        witnesses=(Witness(q, ShapePattern.QUAD_PLUS_QUART_PLUS_DISTINCT_ODD, shape),),
        bound=bound,
        concluded_group=_group_label(target, n),
        disc_square=square,
        disc_s=s,
        disc_sqrt=integer_sqrt(s)[0] if square and s > 0 else None,
        trace_certificate=g_cert,
    )


def revalidate_certificate(p: IntPoly, cert: GaloisCertificate) -> bool:
    """Recompute every stored witness shape from scratch and re-match it."""
    for w in cert.witnesses:
        shape = factor_shape(p, w.q)
        if shape.degrees != w.shape.degrees or not shape.squarefree:
            return False
        if not match_pattern(shape, p.degree, w.pattern):
            return False
    return True


@dataclass(frozen=True)
class SignEmbeddingReport:
    n: int
    elements: int
    failures: int

    @property
    def ok(self) -> bool:
        return self.failures == 0


def brute_force_sign_embedding(n: int) -> SignEmbeddingReport:
    """Exhaustively check, over all 2**n * n! signed permutations acting on
    {-n..-1, 1..n}, that the permutation sign equals the product of the
    sign vector entries."""
    if not 1 <= n <= 4:
        raise ValueError("exhaustive check supported for 1 <= n <= 4")
    symbols = list(range(1, n + 1)) + list(range(-1, -n - 1, -1))
    index = {s: i for i, s in enumerate(symbols)}
    elements = 0
    failures = 0
    for sigma in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            elements += 1
            # image of k is a_sigma(k) * sigma(k); of -k, the negative
            perm = [0] * (2 * n)
            for k in range(1, n + 1):
                image = signs[sigma[k - 1] - 1] * sigma[k - 1]
                perm[index[k]] = index[image]
                perm[index[-k]] = index[-image]
            parity = _permutation_sign(perm)
            expected = 1
            for a in signs:
                expected *= a
            if parity != expected:
                failures += 1
    return SignEmbeddingReport(n=n, elements=elements, failures=failures)


def _permutation_sign(perm: list[int]) -> int:
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign
