"""Backend selection for the sparse polynomial kernels.

The compiled extension ``chevbg._kernels`` is used when it was built and
``CHEVBG_PURE_PYTHON`` is not set to a non-empty value other than ``0``;
otherwise the pure-Python module is used.  Both expose the same five
functions and produce identical results.
"""

import os

from . import _pykernels

_force_pure = os.environ.get("CHEVBG_PURE_PYTHON", "") not in ("", "0")

if _force_pure:
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

poly_add = _impl.poly_add
poly_sub = _impl.poly_sub
poly_mul = _impl.poly_mul
poly_addmul = _impl.poly_addmul
poly_dot = _impl.poly_dot

__all__ = ["BACKEND", "poly_add", "poly_sub", "poly_mul", "poly_addmul", "poly_dot"]
