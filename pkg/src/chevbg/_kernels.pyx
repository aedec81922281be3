# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled sparse polynomial kernels.

Same contract as ``chevbg._pykernels``: polynomials are dicts mapping
exponent tuples to Python ints, ``mod`` is 0 for the integers.
"""

from cpython.dict cimport PyDict_GetItem, PyDict_SetItem
from cpython.ref cimport Py_INCREF, PyObject
from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM, PyTuple_GET_ITEM


cdef inline tuple _mono_mul(tuple ea, tuple eb, Py_ssize_t k):
    cdef tuple out = PyTuple_New(k)
    cdef Py_ssize_t t
    cdef object s
    for t in range(k):
        s = <long>(<object>PyTuple_GET_ITEM(ea, t)) + <long>(<object>PyTuple_GET_ITEM(eb, t))
        Py_INCREF(s)
        PyTuple_SET_ITEM(out, t, s)
    return out


cdef inline void _accumulate(dict acc, dict a, dict b):
    cdef Py_ssize_t k
    cdef tuple ea, eb, e
    cdef object ca, cb
    cdef PyObject* cur
    if not a or not b:
        return
    k = len(next(iter(a)))
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = _mono_mul(ea, eb, k)
            cur = PyDict_GetItem(acc, e)
            if cur is NULL:
                PyDict_SetItem(acc, e, ca * cb)
            else:
                PyDict_SetItem(acc, e, <object>cur + ca * cb)


cdef dict _normalize(dict acc, object mod):
    cdef dict out = {}
    cdef object e, c
    if mod:
        for e, c in acc.items():
            c = c % mod
            if c:
                out[e] = c
    else:
        for e, c in acc.items():
            if c:
                out[e] = c
    return out


def poly_add(dict a, dict b, mod):
    cdef dict acc
    cdef object e, c
    cdef PyObject* cur
    if len(a) < len(b):
        a, b = b, a
    acc = dict(a)
    for e, c in b.items():
        cur = PyDict_GetItem(acc, e)
        if cur is NULL:
            acc[e] = c
        else:
            acc[e] = <object>cur + c
    return _normalize(acc, mod)


def poly_sub(dict a, dict b, mod):
    cdef dict acc = dict(a)
    cdef object e, c
    cdef PyObject* cur
    for e, c in b.items():
        cur = PyDict_GetItem(acc, e)
        if cur is NULL:
            acc[e] = -c
        else:
            acc[e] = <object>cur - c
    return _normalize(acc, mod)


def poly_mul(dict a, dict b, mod):
    cdef dict acc = {}
    _accumulate(acc, a, b)
    return _normalize(acc, mod)


def poly_addmul(dict c, dict a, dict b, mod):
    cdef dict acc = dict(c)
    _accumulate(acc, a, b)
    return _normalize(acc, mod)


def poly_dot(pairs, mod):
    cdef dict acc = {}
    cdef dict a, b
    for a, b in pairs:
        _accumulate(acc, a, b)
    return _normalize(acc, mod)
