import random
from pathlib import Path

import pytest

from feketepoly import fekete_compact, quad_disc

DATA_DIR = Path(__file__).parent / "data"


# Coefficient vectors from the reference tables, constant term first.
def paper_f44():
    # x^8 - x^7 + 2x^6 + 3x^4 + 2x^2 - x + 1
    return [1, -1, 2, 0, 3, 0, 2, -1, 1]


def paper_g44():
    # x^4 - x^3 - 2x^2 + 3x + 1
    return [1, 3, -2, -1, 1]


def paper_f76():
    # x^16 + x^15 + 2x^14 + 3x^12 - x^11 + 2x^10 + 3x^8 + 2x^6 - x^5 + 3x^4 + 2x^2 + x + 1
    return [1, 1, 2, 0, 3, -1, 2, 0, 3, 0, 2, -1, 3, 0, 2, 1, 1]


@pytest.fixture(scope="session")
def bundle44():
    return fekete_compact(quad_disc(44))


@pytest.fixture(scope="session")
def bundle76():
    return fekete_compact(quad_disc(76))


@pytest.fixture(scope="session")
def bundle_m15():
    return fekete_compact(quad_disc(-15))


@pytest.fixture(scope="session")
def bundle33():
    return fekete_compact(quad_disc(33))


@pytest.fixture()
def rng():
    return random.Random(20240811)


def fundamental_discriminants(limit: int):
    """All fundamental discriminants with |delta| <= limit, both signs."""
    out = []
    for delta in range(-limit, limit + 1):
        if delta in (0, 1):
            continue
        try:
            out.append(quad_disc(delta))
        except ValueError:
            continue
    return out
