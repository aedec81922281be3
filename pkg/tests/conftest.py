import random

import pytest
from hypothesis import strategies as st

from chevbg.ring import CoeffSpec, PolyRing

ZX = PolyRing(CoeffSpec(), 1)
ZXY = PolyRing(CoeffSpec(), 2)
Z5X = PolyRing(CoeffSpec(5), 1)


@pytest.fixture
def zx():
    return ZX


@pytest.fixture
def zxy():
    return ZXY


@pytest.fixture
def rng():
    return random.Random(20261016)


def polys(ring, max_terms=4, max_deg=3, coeff=20):
    """Hypothesis strategy for elements of ``ring``."""
    mono = st.tuples(*[st.integers(0, max_deg)] * ring.nvars)
    terms = st.dictionaries(mono, st.integers(-coeff, coeff), max_size=max_terms)
    return terms.map(ring.from_terms)


def evaluate(p, point):
    """Value of ``p`` at an integer point; independent of the kernels."""
    total = 0
    for e, c in p.terms.items():
        term = c
        for x, k in zip(point, e):
            term *= x ** k
        total += term
    m = p.ring.coeffs.modulus
    return total % m if m else total


def evaluate_matrix(m, point):
    return [[evaluate(x, point) for x in row] for row in m.rows]


def int_matmul(a, b):
    return [[sum(x * y for x, y in zip(r, c)) for c in zip(*b)] for r in a]


def pytest_terminal_summary(terminalreporter):
    from tests import acceptance_log

    if acceptance_log.LINES:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_log.LINES:
            terminalreporter.write_line(line)
