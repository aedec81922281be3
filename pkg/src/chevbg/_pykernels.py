"""Pure-Python sparse polynomial kernels.

Polynomials are ``dict[tuple[int, ...], int]`` maps from exponent vectors to
coefficients.  ``mod`` is the coefficient modulus, or 0 for the integers.
Inputs are never mutated; results never contain zero coefficients.
"""


def _normalize(acc, mod):
    if mod:
        return {e: c % mod for e, c in acc.items() if c % mod}
    return {e: c for e, c in acc.items() if c}


def poly_add(a, b, mod):
    if len(a) < len(b):
        a, b = b, a
    acc = dict(a)
    for e, c in b.items():
        acc[e] = acc.get(e, 0) + c
    return _normalize(acc, mod)


def poly_sub(a, b, mod):
    acc = dict(a)
    for e, c in b.items():
        acc[e] = acc.get(e, 0) - c
    return _normalize(acc, mod)


def poly_mul(a, b, mod):
    if not a or not b:
        return {}
    acc = {}
    get = acc.get
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple([x + y for x, y in zip(ea, eb)])
            acc[e] = get(e, 0) + ca * cb
    return _normalize(acc, mod)


def poly_addmul(c, a, b, mod):
    """Return ``c + a*b`` in one pass."""
    acc = dict(c)
    get = acc.get
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple([x + y for x, y in zip(ea, eb)])
            acc[e] = get(e, 0) + ca * cb
    return _normalize(acc, mod)


def poly_dot(pairs, mod):
    """Return the sum of ``a*b`` over ``(a, b)`` in ``pairs``."""
    acc = {}
    get = acc.get
    for a, b in pairs:
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple([x + y for x, y in zip(ea, eb)])
                acc[e] = get(e, 0) + ca * cb
    return _normalize(acc, mod)
