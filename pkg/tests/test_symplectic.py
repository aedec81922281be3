import random

import pytest

from chevbg.errors import IndexRangeError
from chevbg.matrix import SqMatrix, mat_det, mat_mul
from chevbg.ring import parse_poly
from chevbg.sampling import random_poly
from chevbg.symplectic import (
    SP_KINDS,
    SpGen,
    form_matrix,
    is_symplectic,
    random_sp_gen,
    sp_elem_matrix,
    sp_relations_fuzz,
    sp_word_eval,
)
from tests.conftest import ZX, Z5X

a = parse_poly("x1^2-3", 1)


def unit_plus(n2, entries):
    rows = [[ZX.one() if r == c else ZX.zero() for c in range(n2)] for r in range(n2)]
    for (r, c), v in entries.items():
        rows[r - 1][c - 1] = v
    return SqMatrix(rows, ZX)


def test_long_upper():
    m = sp_elem_matrix(SpGen("U", 2, 1, a))
    assert m == unit_plus(4, {(1, 3): a})
    assert is_symplectic(m)


def test_linear():
    m = sp_elem_matrix(SpGen("L", 2, 1, a, 2))
    assert m == unit_plus(4, {(1, 2): a, (4, 3): -a})
    assert is_symplectic(m)


def test_mixed_shapes():
    assert sp_elem_matrix(SpGen("M+", 3, 1, a, 3)) == unit_plus(6, {(1, 6): a, (3, 4): a})
    assert sp_elem_matrix(SpGen("M-", 3, 1, a, 3)) == unit_plus(6, {(6, 1): a, (4, 3): a})
    assert sp_elem_matrix(SpGen("D", 3, 2, a)) == unit_plus(6, {(5, 2): a})


@pytest.mark.parametrize("kind", SP_KINDS)
def test_zero_parameter_is_identity(kind):
    j = 2 if kind in ("L", "M+", "M-") else 0
    assert sp_elem_matrix(SpGen(kind, 2, 1, ZX.zero(), j)).is_identity()


@pytest.mark.parametrize("ring", [ZX, Z5X], ids=str)
@pytest.mark.parametrize("kind", SP_KINDS)
def test_form_det_additivity(kind, ring):
    rng = random.Random(hash(kind) % 1000)
    for n in (2, 3):
        for _ in range(5):
            i = rng.randint(1, n)
            j = rng.choice([t for t in range(1, n + 1) if t != i]) if kind in ("L", "M+", "M-") \
                else 0
            p, q = random_poly(rng, ring), random_poly(rng, ring)
            g = SpGen(kind, n, i, p, j)
            m = sp_elem_matrix(g)
            assert is_symplectic(m) and mat_det(m) == 1
            assert mat_mul(m, sp_elem_matrix(g.with_param(q))) == sp_elem_matrix(
                g.with_param(p + q))
            assert mat_mul(m, sp_elem_matrix(g.inverse())).is_identity()


def test_non_symplectic_detected():
    bad = unit_plus(4, {(1, 3): ZX.var(1), (2, 4): ZX.one(), (1, 4): ZX.one()})
    assert not is_symplectic(bad)
    assert not is_symplectic(SqMatrix.identity(3, ZX))


def test_form_is_antisymmetric():
    j = form_matrix(3, ZX)
    assert j.transpose() == -j


def test_index_validation():
    with pytest.raises(IndexRangeError):
        SpGen("U", 2, 3, a)
    with pytest.raises(ValueError):
        SpGen("L", 2, 1, a, 1)
    with pytest.raises(ValueError):
        SpGen("U", 2, 1, a, 2)
    with pytest.raises(ValueError):
        SpGen("X", 2, 1, a)
    with pytest.raises(ValueError):
        SpGen("U", 1, 1, a)


def test_token():
    assert SpGen("M+", 3, 1, a, 2).token() == "SpM+(1,2;x1^2-3)"
    assert SpGen("D", 3, 1, a).token() == "SpD(1;x1^2-3)"


def test_fuzz_rejects_zero_trials():
    with pytest.raises(ValueError):
        sp_relations_fuzz(0, 0)


def test_fuzz_passes_and_is_deterministic():
    r1 = sp_relations_fuzz(42, 20)
    r2 = sp_relations_fuzz(42, 20)
    assert r1.ok and r1.passed == 20
    assert r1.as_dict() == r2.as_dict()


def test_long_product_preserves_form():
    rng = random.Random(5)
    word = [random_sp_gen(rng, 3, ZX) for _ in range(10)]
    assert is_symplectic(sp_word_eval(word, 3, ZX))


def test_long_root_commutator_structure_constant():
    # [L(1,2;s), U(2;t)] = M+(1,2;s t) U(1;s^2 t)
    s, t = parse_poly("x1", 1), parse_poly("x1+2", 1)
    g1, g2 = SpGen("L", 2, 1, s, 2), SpGen("U", 2, 2, t)
    comm = sp_word_eval([g1, g2, g1.inverse(), g2.inverse()], 2, ZX)
    rhs = sp_word_eval([SpGen("M+", 2, 1, s * t, 2), SpGen("U", 2, 1, s * s * t)], 2, ZX)
    assert comm == rhs
