import pytest
from hypothesis import given, settings, strategies as st

from chevbg import _pykernels, kernels

try:
    from chevbg import _kernels as compiled
except ImportError:  # extension not built
    compiled = None

needs_ext = pytest.mark.skipif(compiled is None, reason="compiled kernels not built")


def term_maps(k=2):
    mono = st.tuples(*[st.integers(0, 4)] * k)
    return st.dictionaries(mono, st.integers(-10**20, 10**20).filter(bool), max_size=6)


MODS = st.sampled_from([0, 2, 7, 12])


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")


@needs_ext
@settings(max_examples=150, deadline=None)
@given(a=term_maps(), b=term_maps(), c=term_maps(), mod=MODS)
def test_backends_agree(a, b, c, mod):
    for name in ("poly_add", "poly_sub", "poly_mul"):
        assert getattr(compiled, name)(a, b, mod) == getattr(_pykernels, name)(a, b, mod)
    assert compiled.poly_addmul(c, a, b, mod) == _pykernels.poly_addmul(c, a, b, mod)
    pairs = [(a, b), (b, c), (c, a)]
    assert compiled.poly_dot(pairs, mod) == _pykernels.poly_dot(pairs, mod)


@pytest.mark.parametrize("mod_", [_pykernels, compiled], ids=["python", "cython"])
def test_inputs_untouched_and_zero_free(mod_):
    if mod_ is None:
        pytest.skip("compiled kernels not built")
    a = {(1,): 2, (0,): 3}
    b = {(1,): -2, (0,): 5}
    a0, b0 = dict(a), dict(b)
    assert mod_.poly_add(a, b, 0) == {(0,): 8}
    assert mod_.poly_mul(a, b, 0) == {(2,): -4, (1,): 4, (0,): 15}
    assert mod_.poly_mul(a, b, 4) == {(0,): 3}
    assert mod_.poly_mul({}, b, 0) == {}
    assert mod_.poly_addmul(a, {}, b, 0) == a
    assert mod_.poly_dot([], 0) == {}
    assert (a, b) == (a0, b0)
