"""Generalized Fekete polynomials of quadratic Dirichlet characters:
construction, cyclotomic content, and Galois group certification."""

from .ntheory import (
    Family,
    QuadDisc,
    b1_chi,
    chi,
    class_number_imaginary,
    euler_phi,
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
from .zpoly import (
    IntPoly,
    disc_sign_factor,
    discriminant,
    exact_div,
    expand_trace,
    resultant,
    trace_polynomial,
)
from .cyclotomic import (
    MultiplicityReport,
    cyclotomic_poly,
    multiplicity,
    predicted_multiplicities,
    strip_cyclotomic,
)
from .fekete import (
    FeketeBundle,
    FeketeDivisionError,
    expected_compact_degree,
    fekete_compact,
    fekete_modified,
    fekete_raw,
    fekete_trace,
)
from .ffpoly import (
    FactorShape,
    ModPoly,
    UnusablePrimeError,
    distinct_degree_factorization,
    equal_degree_factorization,
    factor_mod,
    factor_shape,
    gcd_mod,
    reduce_poly,
)
from .galois import (
    GaloisCertificate,
    ShapePattern,
    Target,
    VerificationError,
    Witness,
    brute_force_sign_embedding,
    certify_full_2cycle,
    certify_full_quadruple,
    certify_kernel,
    certify_trace_symmetric,
    disc_is_square,
    trace_certificate_from_primes,
    find_smallest_witness,
    match_pattern,
    revalidate_certificate,
)
from .pipeline import TableMode, TableRow, TableSpec, run_row, run_table, verify_csv

__version__ = "0.1.0"
