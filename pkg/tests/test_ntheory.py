import math
from fractions import Fraction

import pytest

from feketepoly.ntheory import (
    Family,
    b1_chi,
    chi,
    class_number_imaginary,
    euler_phi,
    factorize,
    fundamental_discriminant,
    integer_sqrt,
    is_prime,
    is_squarefree,
    kronecker,
    moebius,
    next_prime,
    quad_disc,
    weighted_char_sum,
)
from conftest import fundamental_discriminants


# -- independent oracles -------------------------------------------------------


def legendre_oracle(a, p):
    """Legendre symbol by the Euler criterion (odd prime p)."""
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def kronecker_oracle(a, n):
    """Kronecker symbol straight from the defining factorization of n."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    out = 1
    if n < 0:
        out = -1 if a < 0 else 1
        n = -n
    for p, e in factorize(n):
        if p == 2:
            if a % 2 == 0:
                s = 0
            elif a % 8 in (1, 7):
                s = 1
            else:
                s = -1
        else:
            s = legendre_oracle(a, p)
        out *= s**e
    return out


def trial_division_prime(n):
    if n < 2:
        return False
    return all(n % k for k in range(2, math.isqrt(n) + 1))


# -- kronecker -----------------------------------------------------------------


def test_kronecker_unit_denominator():
    assert kronecker(7, 1) == 1
    assert kronecker(0, 1) == 1
    assert kronecker(0, -1) == 1
    assert kronecker(-9, -1) == -1


def test_kronecker_two_cases():
    assert kronecker(9, 2) == 1
    assert kronecker(5, 2) == -1
    assert kronecker(7, 2) == 1
    assert kronecker(4, 2) == 0


def test_kronecker_zero_denominator():
    assert kronecker(1, 0) == 1
    assert kronecker(-1, 0) == 1
    assert kronecker(5, 0) == 0


def test_kronecker_legendre_case():
    assert kronecker(-4, 3) == -1
    for p in (3, 5, 7, 11, 13, 101):
        for a in range(-30, 31):
            assert kronecker(a, p) == legendre_oracle(a, p), (a, p)


def test_kronecker_matches_definition_oracle():
    for a in range(-60, 61):
        for n in range(-60, 61):
            assert kronecker(a, n) == kronecker_oracle(a, n), (a, n)


def test_kronecker_numerator_zero_convention():
    # (0/-1) = 1 by the sign convention, which is why full multiplicativity
    # must exclude a*b = 0 at n = -1: (0*b/-1) != (0/-1)(b/-1) for b < 0
    assert kronecker(0, -1) == 1
    assert kronecker(-5, -1) == -1
    assert kronecker(0, -1) * kronecker(-5, -1) != kronecker(0, -1)


def test_kronecker_multiplicative_in_numerator():
    for n in range(-40, 41):
        for a in range(-40, 41):
            for b in range(-40, 41, 7):
                if n == -1 and a * b == 0:
                    continue
                assert kronecker(a, n) * kronecker(b, n) == kronecker(a * b, n)


@pytest.mark.slow
def test_kronecker_multiplicative_exhaustive():
    # all |a|, |b|, |n| <= 200; the product grid is vectorized and the
    # symbol is evaluated once per distinct product value
    import numpy as np

    vals = np.arange(-200, 201)
    products = np.outer(vals, vals)
    unique, inverse = np.unique(products, return_inverse=True)
    for n in range(-200, 201):
        row = np.array([kronecker(int(a), n) for a in vals])
        lhs = np.outer(row, row)
        expected = np.array([kronecker(int(v), n) for v in unique])[inverse].reshape(
            lhs.shape
        )
        mismatch = lhs != expected
        if n == -1:
            mismatch &= products != 0  # degenerate by the (a/-1) convention
        assert not mismatch.any(), (n, np.argwhere(mismatch)[:3])


# -- primes and arithmetic functions ---------------------------------------------


def test_is_prime_small_range():
    for n in range(0, 2000):
        assert is_prime(n) == trial_division_prime(n), n


def test_is_prime_examples():
    assert is_prime(647)
    assert not is_prime(1)
    assert is_prime(2**61 - 1)
    assert not is_prime(2**61 + 1)


def test_next_prime():
    assert next_prime(0) == 2
    assert next_prime(2) == 3
    assert next_prime(89) == 97
    assert next_prime(10**5) == 100003


def test_euler_phi_and_moebius():
    assert euler_phi(44) == 20
    assert euler_phi(1) == 1
    assert moebius(12) == 0
    assert moebius(1) == 1
    assert moebius(30) == -1
    for n in range(1, 300):
        assert euler_phi(n) == sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)
        divisor_sum = sum(moebius(d) for d in range(1, n + 1) if n % d == 0)
        assert divisor_sum == (1 if n == 1 else 0)


def test_is_squarefree():
    assert is_squarefree(1)
    assert is_squarefree(-15)
    assert not is_squarefree(12)
    assert not is_squarefree(0)


def test_integer_sqrt():
    assert integer_sqrt(324) == (18, True)
    assert integer_sqrt(0) == (0, True)
    assert integer_sqrt(77) == (8, False)
    for n in list(range(200)) + [10**30, 10**30 + 1]:
        r, exact = integer_sqrt(n)
        assert r * r <= n < (r + 1) * (r + 1)
        assert exact == (r * r == n)


# -- discriminants ----------------------------------------------------------------


def test_fundamental_discriminant_examples():
    assert fundamental_discriminant(-1).delta == -4
    assert fundamental_discriminant(5).delta == 5
    d = fundamental_discriminant(11)
    assert d.delta == 44 and d.family is Family.FOUR_P and d.p == 11


def test_fundamental_discriminant_rejects():
    for bad in (0, 1, 12, -8):
        with pytest.raises(ValueError):
            fundamental_discriminant(bad)


def test_quad_disc_validation():
    with pytest.raises(ValueError):
        quad_disc(43)  # 43 = 3 mod 4: not a discriminant
    with pytest.raises(ValueError):
        quad_disc(45)  # not squarefree
    assert quad_disc(-15).family is Family.MINUS_THREE_P
    assert quad_disc(-15).p == 5
    assert quad_disc(33).family is Family.THREE_P
    assert quad_disc(-52).family is Family.MINUS_FOUR_P
    assert quad_disc(-3).family is Family.ODD_PRIME
    assert quad_disc(40).family is Family.GENERIC


def test_family_classification_strictness():
    # delta = 12 = 4*3 classifies as the 4p family; the 3p families need p > 3
    assert quad_disc(12).family is Family.FOUR_P
    assert quad_disc(-8).family is Family.GENERIC


def test_chi_examples():
    assert chi(quad_disc(-4), 3) == -1
    assert chi(quad_disc(5), 2) == -1
    for d in (quad_disc(-4), quad_disc(44), quad_disc(-15)):
        assert chi(d, 0) == 0


def test_chi_periodicity_and_support():
    for d in fundamental_discriminants(300):
        D = d.conductor
        for a in range(0, 2 * D):
            v = chi(d, a)
            assert v == chi(d, a + D)
            assert (v == 0) == (math.gcd(a, D) > 1)


def test_chi_parity_matches_sign():
    for d in fundamental_discriminants(300):
        assert chi(d, -1) == (1 if d.delta > 0 else -1)


# -- class numbers ----------------------------------------------------------------


def brute_reduced_forms(D):
    """All reduced forms of discriminant -D by raw triple enumeration."""
    forms = []
    bound = math.isqrt(D // 3) + 1
    for a in range(1, bound + 1):
        for b in range(-a, a + 1):
            num = b * b + D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if not (abs(b) <= a <= c):
                continue
            if (abs(b) == a or a == c) and b < 0:
                continue
            forms.append((a, b, c))
    return forms


def test_class_number_examples():
    assert class_number_imaginary(3) == 1
    assert class_number_imaginary(4) == 1
    assert class_number_imaginary(23) == 3
    assert sorted(brute_reduced_forms(23)) == [(1, 1, 6), (2, -1, 3), (2, 1, 3)]


def test_class_number_matches_enumeration():
    for D in range(3, 1000):
        if (-D) % 4 in (0, 1):
            assert class_number_imaginary(D) == len(brute_reduced_forms(D)), D


def test_class_number_rejects_bad_congruence():
    with pytest.raises(ValueError):
        class_number_imaginary(5)
    with pytest.raises(ValueError):
        class_number_imaginary(-3)


# -- character sums ----------------------------------------------------------------


def test_weighted_char_sum_examples():
    assert weighted_char_sum(quad_disc(5), 0, 1, 4) == 0
    assert weighted_char_sum(quad_disc(5), 0, 1, 2) == 0
    assert weighted_char_sum(quad_disc(-4), 1, 1, 3) == -2


def test_weighted_char_sum_range_check():
    with pytest.raises(ValueError):
        weighted_char_sum(quad_disc(5), 1, 0, 4)
    with pytest.raises(ValueError):
        weighted_char_sum(quad_disc(5), 3, 1, 4)


def test_half_sum_vanishes_for_even_characters():
    for d in fundamental_discriminants(300):
        if d.delta > 0 and d.conductor % 2 == 1:
            assert weighted_char_sum(d, 0, 1, (d.conductor - 1) // 2) == 0


def test_linear_sum_vanishes_iff_positive():
    for d in fundamental_discriminants(300):
        s1 = weighted_char_sum(d, 1, 1, d.conductor - 1)
        assert (s1 == 0) == (d.delta > 0)
        assert weighted_char_sum(d, 2, 1, d.conductor - 1) != 0


def test_b1_examples():
    assert b1_chi(quad_disc(5)) == 0
    assert b1_chi(quad_disc(-4)) == Fraction(-1, 2)
    assert b1_chi(quad_disc(-15)) == -2
    assert class_number_imaginary(15) == 2


def test_b1_equals_minus_class_number():
    for d in fundamental_discriminants(600):
        D = d.conductor
        if d.delta < 0 and D % 2 == 1 and D > 4:
            assert b1_chi(d) == -class_number_imaginary(D), d.delta
