import random

import pytest

from chevbg.chevalley import ElemGen, Word, elem_matrix, word_eval, word_inverse
from chevbg.cocycle import (
    CocycleValue,
    cocycle_defect,
    derivation_cocycle,
    in_kernel,
    int_matrix,
    kernel_word,
    reduce_at_zero,
)
from chevbg.errors import UnsupportedError
from chevbg.matrix import SqMatrix, mat_det, mat_mul
from chevbg.ring import parse_poly
from chevbg.sampling import random_word
from tests.conftest import ZX, ZXY, Z5X


def E(i, j, a, n=3):
    return elem_matrix(ElemGen(i, j, ZX.coerce(a)), n)


def ints(rows):
    return CocycleValue(tuple(tuple(r) for r in rows))


def pi(g):
    return int_matrix(reduce_at_zero(g))


def test_reduce_examples():
    assert reduce_at_zero(SqMatrix.identity(3, ZX)).is_identity()
    assert reduce_at_zero(E(1, 2, "x1")).is_identity()
    assert pi(E(1, 2, "x1+3")) == ints([[1, 3, 0], [0, 1, 0], [0, 0, 1]])


def test_reduce_preserves_det():
    rng = random.Random(1)
    for _ in range(5):
        g = word_eval(random_word(rng, 3, ZX, max_len=6))
        assert mat_det(reduce_at_zero(g)) == 1


def test_cocycle_examples():
    assert derivation_cocycle(E(1, 2, "x1")) == CocycleValue.unit(3, 1, 2)
    assert derivation_cocycle(E(1, 2, 3)).is_zero()
    g = mat_mul(E(1, 2, "x1"), E(2, 1, "x1"))
    assert derivation_cocycle(g) == CocycleValue.unit(3, 1, 2) + CocycleValue.unit(3, 2, 1)


def test_cocycle_reads_linear_coefficient():
    g = E(2, 3, "5*x1^3-4*x1+7")
    assert derivation_cocycle(g) == -4 * CocycleValue.unit(3, 2, 3)


def test_only_zx():
    for ring in (ZXY, Z5X):
        g = SqMatrix.identity(3, ring)
        with pytest.raises(UnsupportedError):
            reduce_at_zero(g)
        with pytest.raises(UnsupportedError):
            derivation_cocycle(g)


def test_defect_examples():
    rng = random.Random(2)
    samples = [(word_eval(random_word(rng, 3, ZX)), word_eval(random_word(rng, 3, ZX)))
               for _ in range(10)]
    assert cocycle_defect(derivation_cocycle, samples) == 0
    assert cocycle_defect(derivation_cocycle, []) == 0
    shift = CocycleValue.unit(3, 1, 1)
    shifted = lambda g: derivation_cocycle(g) + shift  # noqa: E731
    kg = word_eval(kernel_word(random_word(rng, 3, ZX, min_len=1)))
    assert cocycle_defect(shifted, [(kg, kg)]) >= 1


def test_leibniz_and_inverse_identity():
    rng = random.Random(3)
    for _ in range(30):
        w1, w2 = random_word(rng, 3, ZX, max_len=10), random_word(rng, 3, ZX, max_len=10)
        g, h = word_eval(w1), word_eval(w2)
        c = derivation_cocycle
        assert c(mat_mul(g, h)) == c(g) @ pi(h) + pi(g) @ c(h)
        pinv = pi(word_eval(word_inverse(w1)))
        assert c(word_eval(word_inverse(w1))) == -(pinv @ c(g) @ pinv)


def test_kernel_words():
    rng = random.Random(4)
    for _ in range(20):
        k1 = word_eval(kernel_word(random_word(rng, 3, ZX, max_len=6)))
        k2 = word_eval(kernel_word(random_word(rng, 3, ZX, max_len=6)))
        assert in_kernel(k1) and in_kernel(k2)
        c = derivation_cocycle
        assert c(mat_mul(k1, k2)) == c(k1) + c(k2)


def test_surjection_witness():
    g = E(1, 2, "x1")
    assert in_kernel(g)
    for m in range(1, 21):
        gm = word_eval(Word(3, ZX, [ElemGen(1, 2, ZX.var(1))] * m))
        assert derivation_cocycle(gm).entries[0][1] == m
        assert derivation_cocycle(gm) == m * CocycleValue.unit(3, 1, 2)


def test_value_arithmetic():
    a = ints([[1, 2], [3, 4]])
    assert (a @ a).tolist() == [[7, 10], [15, 22]]
    assert (a - a).is_zero() and (-a).max_abs() == 4
    with pytest.raises(ValueError):
        ints([[1, 2], [3]])
    with pytest.raises(ValueError):
        int_matrix(E(1, 2, "x1"))
