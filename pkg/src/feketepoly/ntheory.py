"""Elementary number theory: Kronecker symbols, quadratic discriminants,
primes, class numbers, and weighted character sums."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

# Witnesses making Miller-Rabin deterministic for all n < 3.3 * 10**24,
# comfortably past the 2**64 guarantee the API promises.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test (Miller-Rabin with a fixed witness set)."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    if n < 2:
        return 2
    k = n + 1 if n % 2 == 0 else n + 2
    while not is_prime(k):
        k += 2
    return k


@lru_cache(maxsize=64)
def primes_up_to(n: int) -> tuple[int, ...]:
    """All primes <= n, by sieve. Cached; intended for repeated search sweeps."""
    if n < 2:
        return ()
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, n + 1, p)))
    return tuple(i for i, b in enumerate(sieve) if b)


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as ((p, e), ...), by trial division."""
    if n < 1:
        raise ValueError("factorize expects n >= 1")
    out = []
    for p in (2, 3):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
    p = 5
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
        p += 2 if p % 6 == 5 else 4
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of n >= 1."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def euler_phi(n: int) -> int:
    if n <= 0:
        return 0
    out = n
    for p, _ in factorize(n):
        out = out // p * (p - 1)
    return out


def moebius(n: int) -> int:
    if n <= 0:
        return 0
    out = 1
    for _, e in factorize(n):
        if e > 1:
            return 0
        out = -out
    return out


def is_squarefree(n: int) -> bool:
    n = abs(n)
    if n == 0:
        return False
    return all(e == 1 for _, e in factorize(n))


def integer_sqrt(n: int) -> tuple[int, bool]:
    """Floor square root of n >= 0 together with an exactness flag."""
    if n < 0:
        raise ValueError("integer_sqrt expects n >= 0")
    r = math.isqrt(n)
    return r, r * r == n


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n), defined for all integer pairs.

    Conventions: (a/0) is 1 for a = +-1 and 0 otherwise; (a/-1) is 1 for
    a >= 0 and -1 for a < 0; (a/2) is 0 for even a, +1 for a = +-1 (mod 8)
    and -1 for a = +-3 (mod 8). Fully multiplicative in n over its signed
    prime factorization.
    """
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -1
    if n % 2 == 0:
        if a % 2 == 0:
            return 0
        while n % 2 == 0:
            n //= 2
            if a % 8 in (3, 5):
                result = -result
    # Jacobi symbol on the remaining odd positive n, by reciprocity.
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


class Family(Enum):
    """Classification of a fundamental discriminant by its prime shape."""

    FOUR_P = "4p"
    MINUS_FOUR_P = "-4p"
    THREE_P = "3p"
    MINUS_THREE_P = "-3p"
    ODD_PRIME = "odd_prime"
    GENERIC = "generic"


@dataclass(frozen=True)
class QuadDisc:
    """A validated fundamental discriminant with its conductor and family.

    `p` is the associated prime for the four p-families, else None.
    """

    delta: int
    conductor: int
    family: Family
    p: int | None = None

    def chi(self, a: int) -> int:
        return kronecker(self.delta, a)


def _classify(delta: int) -> tuple[Family, int | None]:
    d = abs(delta)
    if delta % 4 == 0:
        p = d // 4
        if delta > 0 and is_prime(p) and p % 4 == 3:
            return Family.FOUR_P, p
        if delta < 0 and is_prime(p) and p % 4 == 1:
            return Family.MINUS_FOUR_P, p
        return Family.GENERIC, None
    if d % 3 == 0:
        p = d // 3
        if p > 3 and is_prime(p):
            if delta > 0 and p % 4 == 3:
                return Family.THREE_P, p
            if delta < 0 and p % 4 == 1:
                return Family.MINUS_THREE_P, p
    if is_prime(d):
        return Family.ODD_PRIME, None
    return Family.GENERIC, None


def quad_disc(delta: int) -> QuadDisc:
    """Validate delta as a fundamental discriminant and classify it."""
    if delta in (0, 1):
        raise ValueError(f"{delta} is not a fundamental discriminant")
    if delta % 4 == 1:
        if not is_squarefree(delta):
            raise ValueError(f"{delta} is not squarefree")
    elif delta % 4 == 0:
        d = delta // 4
        if d % 4 not in (2, 3) or not is_squarefree(d):
            raise ValueError(f"{delta} is not a fundamental discriminant")
    else:
        raise ValueError(f"{delta} is not a fundamental discriminant")
    family, p = _classify(delta)
    return QuadDisc(delta=delta, conductor=abs(delta), family=family, p=p)


def fundamental_discriminant(d: int) -> QuadDisc:
    """Fundamental discriminant of Q(sqrt(d)) for squarefree d not in {0, 1}."""
    if d in (0, 1):
        raise ValueError("d must be a squarefree integer other than 0 and 1")
    if not is_squarefree(d):
        raise ValueError(f"{d} is not squarefree")
    delta = d if d % 4 == 1 else 4 * d
    return quad_disc(delta)


def chi(d: QuadDisc, a: int) -> int:
    """Primitive quadratic character of conductor |delta|, via the Kronecker symbol."""
    return kronecker(d.delta, a)


def class_number_imaginary(d: int) -> int:
    """Class number h(-d): count of reduced binary quadratic forms ax^2+bxy+cy^2
    of discriminant b^2-4ac = -d, with |b| <= a <= c and b >= 0 when |b| = a
    or a = c. Accepts any d > 0 with -d = 0 or 1 (mod 4), fundamental or not.
    """
    if d <= 0 or (-d) % 4 not in (0, 1):
        raise ValueError(f"-{d} is not a discriminant (need -d = 0 or 1 mod 4)")
    count = 0
    a = 1
    while 3 * a * a <= d:
        foura = 4 * a
        for b in range(-a + 1, a + 1):
            t = b * b + d
            if t % foura:
                continue
            c = t // foura
            if c < a:
                continue
            if b < 0 and a == c:
                continue
            count += 1
        a += 1
    return count


def weighted_char_sum(d: QuadDisc, k: int, lo: int, hi: int) -> int:
    """Sum of chi(a) * a**k for a in [lo, hi], exactly."""
    if k not in (0, 1, 2):
        raise ValueError("exponent k must be 0, 1 or 2")
    if lo < 1 or hi > d.conductor - 1:
        raise ValueError("range must lie inside [1, D-1]")
    delta = d.delta
    total = 0
    for a in range(lo, hi + 1):
        c = kronecker(delta, a)
        if c:
            total += c * a**k if k else c
    return total


def b1_chi(d: QuadDisc) -> Fraction:
    """Generalized first Bernoulli number of the character: (sum chi(a)*a)/D."""
    D = d.conductor
    return Fraction(weighted_char_sum(d, 1, 1, D - 1), D)
