import random

import pytest
from hypothesis import given, settings, strategies as st

from chevbg.chevalley import ElemGen, elem_matrix
from chevbg.errors import IncompatibleRingError
from chevbg.matrix import SqMatrix, det_bareiss, det_cofactor, mat_det, mat_mul
from chevbg.ring import parse_poly
from chevbg.sampling import random_poly
from tests.conftest import ZX, ZXY, Z5X, evaluate, evaluate_matrix, int_matmul, polys


def P(text, ring=ZX):
    return parse_poly(text, ring.nvars, ring.coeffs)


def E(i, j, a, n=3, ring=ZX):
    return elem_matrix(ElemGen(i, j, ring.coerce(a)), n)


def test_identity_product():
    i3 = SqMatrix.identity(3, ZX)
    assert mat_mul(i3, i3) == i3


def test_inverse_pair():
    assert mat_mul(E(1, 2, "x1"), E(1, 2, "-x1")).is_identity()


def test_hand_product():
    m = mat_mul(E(1, 2, "x1"), E(2, 3, 1))
    expect = SqMatrix.from_strings([["1", "x1", "x1"], ["0", "1", "1"], ["0", "0", "1"]], ZX)
    assert m == expect


def test_mismatch():
    with pytest.raises(ValueError):
        mat_mul(SqMatrix.identity(3, ZX), SqMatrix.identity(2, ZX))
    with pytest.raises(IncompatibleRingError):
        mat_mul(SqMatrix.identity(3, ZX), SqMatrix.identity(3, ZXY))


def test_dimension_guard():
    with pytest.raises(ValueError):
        SqMatrix.identity(13, ZX)
    with pytest.raises(ValueError):
        SqMatrix([[ZX.one()]])


def test_det_examples():
    assert mat_det(SqMatrix.identity(3, ZX)) == 1
    assert mat_det(E(1, 2, "x1^3-7")) == 1
    assert mat_det(mat_mul(E(2, 1, "x1"), E(1, 3, "x1^2"))) == 1


def test_det_known_values():
    m = SqMatrix.from_strings([["x1", "1"], ["2", "x1"]], ZX)
    assert mat_det(m) == P("x1^2-2")
    vander = SqMatrix.from_strings(
        [[str(t ** p) for p in range(5)] for t in range(1, 6)], ZX)
    # Vandermonde: prod_{i<j} (t_j - t_i) over t = 1..5
    assert det_bareiss(vander) == 288
    assert det_cofactor(vander) == 288
    singular = SqMatrix.from_strings([["x1", "x1", "0", "0", "0"]] * 5, ZX)
    assert mat_det(singular) == 0


def test_bareiss_needs_pivoting():
    rows = [["0", "1", "0", "0", "0"], ["1", "0", "0", "0", "0"], ["0", "0", "x1", "0", "0"],
            ["0", "0", "0", "1", "0"], ["0", "0", "0", "0", "1"]]
    assert det_bareiss(SqMatrix.from_strings(rows, ZX)) == P("-x1")


def _rand_matrix(rng, n, ring, **kw):
    return SqMatrix([[random_poly(rng, ring, **kw) for _ in range(n)] for _ in range(n)], ring)


@pytest.mark.parametrize("ring", [ZX, ZXY, Z5X], ids=str)
@pytest.mark.parametrize("n", [5, 6])
def test_bareiss_agrees_with_cofactor(ring, n):
    rng = random.Random(n)
    for _ in range(3):
        m = _rand_matrix(rng, n, ring, max_terms=2, max_deg=1, coeff_bound=3)
        assert det_bareiss(m) == det_cofactor(m)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_det_multiplicative(n):
    rng = random.Random(100 + n)
    for ring in (ZX, ZXY, Z5X):
        for _ in range(5):
            a = _rand_matrix(rng, n, ring, max_terms=2, max_deg=2)
            b = _rand_matrix(rng, n, ring, max_terms=2, max_deg=2)
            assert mat_det(mat_mul(a, b)) == mat_det(a) * mat_det(b)


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_associative(data):
    n = data.draw(st.integers(2, 4))
    ms = [SqMatrix([[data.draw(polys(ZXY, max_terms=2, max_deg=2)) for _ in range(n)]
                    for _ in range(n)]) for _ in range(3)]
    a, b, c = ms
    assert mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c))


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_product_matches_evaluation(data):
    n = data.draw(st.integers(2, 4))
    a, b = (SqMatrix([[data.draw(polys(ZX, max_terms=2)) for _ in range(n)]
                      for _ in range(n)]) for _ in range(2))
    t = data.draw(st.integers(-5, 5))
    assert evaluate_matrix(mat_mul(a, b), (t,)) == int_matmul(evaluate_matrix(a, (t,)),
                                                              evaluate_matrix(b, (t,)))
    assert evaluate(mat_det(a), (t,)) == evaluate(
        det_cofactor(SqMatrix.from_strings([[str(v) for v in r]
                                            for r in evaluate_matrix(a, (t,))], ZX)), (0,))
