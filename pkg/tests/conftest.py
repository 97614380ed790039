"""Shared fixtures and independent oracles for the test suite."""

from fractions import Fraction

import pytest

try:
    from hypothesis import HealthCheck, settings

    settings.register_profile(
        "suite",
        derandomize=True,
        max_examples=40,
        suppress_health_check=[HealthCheck.too_slow],
    )
    settings.load_profile("suite")
except ImportError:
    pass

# The n = 5 tiling used as a running example throughout: its word, its tiles
# and both printed kappa partitions, kept verbatim so regressions in the
# builder or the border sweep cannot slip through.
RUNNING_WORD = (2, 1, 2, 3, 4, 3, 2, 1, 3, 2)

RUNNING_TILES = {
    ((1, 3), ()),
    ((2, 3), (1,)),
    ((3, 5), ()),
    ((1, 2), (3,)),
    ((2, 5), (3,)),
    ((3, 4), (5,)),
    ((1, 4), (2, 3)),
    ((2, 4), (3, 5)),
    ((4, 5), (2, 3)),
    ((1, 5), (2, 3, 4)),
}

RUNNING_KAPPA_5 = {
    (2, 3): 1,
    (1, 3): 2,
    (1, 2): 3,
    (1, 4): 4,
    (1, 5): 5,
    (4, 5): 6,
    (2, 5): 7,
    (3, 5): 8,
    (2, 4): 8,
    (3, 4): 9,
}

RUNNING_KAPPA_3 = {
    (2, 3): 1,
    (1, 3): 2,
    (1, 2): 3,
    (3, 5): 3,
    (2, 5): 4,
    (3, 4): 4,
    (2, 4): 5,
    (4, 5): 6,
    (1, 4): 7,
    (1, 5): 8,
}


@pytest.fixture(scope="session")
def running_word():
    return RUNNING_WORD


@pytest.fixture(scope="session")
def running_tiling():
    from crystaltiles.tiling import build_tiling

    return build_tiling(RUNNING_WORD)


def weyl_dim_oracle(lam) -> int:
    """Independent dimension count for highest-weight modules.

    Kept separate from the library's own formula on purpose: the crystal
    sizes in the acceptance gate are compared against this copy.
    """
    lam = tuple(lam)
    n = len(lam) + 1
    out = Fraction(1)
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            height = b - a
            out *= Fraction(height + sum(lam[a - 1 : b - 1]), height)
    assert out.denominator == 1
    return out.numerator
