"""Dense square matrices over :class:`~chevbg.ring.RingElem`."""

from __future__ import annotations

from itertools import permutations
from typing import Sequence

from . import kernels
from .errors import IncompatibleRingError, IndexRangeError
from .ring import PolyRing, RingElem, exact_div

__all__ = ["SqMatrix", "MAX_DIM", "mat_mul", "mat_det", "det_cofactor", "det_bareiss"]

MAX_DIM = 12


class SqMatrix:
    """Immutable ``n x n`` matrix; ``rows`` is a tuple of tuples of RingElem."""

    __slots__ = ("ring", "n", "rows")

    def __init__(self, rows: Sequence[Sequence[RingElem]], ring: PolyRing | None = None):
        n = len(rows)
        if not 2 <= n <= MAX_DIM:
            raise ValueError(f"dimension must be in 2..{MAX_DIM}, got {n}")
        if any(len(r) != n for r in rows):
            raise ValueError("matrix is not square")
        if ring is None:
            ring = rows[0][0].ring
        self.ring = ring
        self.n = n
        self.rows = tuple(tuple(ring.coerce(x) for x in r) for r in rows)

    @classmethod
    def _wrap(cls, rows, ring: PolyRing) -> "SqMatrix":
        # trusted constructor: rows already canonical tuples over ``ring``
        m = object.__new__(cls)
        m.ring = ring
        m.n = len(rows)
        m.rows = rows
        return m

    @classmethod
    def identity(cls, n: int, ring: PolyRing) -> "SqMatrix":
        one, zero = ring.one(), ring.zero()
        return cls([[one if r == c else zero for c in range(n)] for r in range(n)], ring)

    @classmethod
    def from_strings(cls, rows, ring: PolyRing) -> "SqMatrix":
        return cls([[ring.coerce(s) for s in r] for r in rows], ring)

    def __getitem__(self, rc):
        """0-based ``m[r, c]``."""
        r, c = rc
        return self.rows[r][c]

    def entry(self, i: int, j: int) -> RingElem:
        """1-based entry access."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexRangeError(f"({i},{j}) outside 1..{self.n}")
        return self.rows[i - 1][j - 1]

    def column(self, j: int):
        """1-based column as a tuple."""
        return tuple(r[j - 1] for r in self.rows)

    def row(self, i: int):
        """1-based row as a tuple."""
        return self.rows[i - 1]

    def transpose(self) -> "SqMatrix":
        return SqMatrix([list(c) for c in zip(*self.rows)], self.ring)

    def is_identity(self) -> bool:
        return all(
            (x.is_one() if r == c else x.is_zero())
            for r, row in enumerate(self.rows)
            for c, x in enumerate(row)
        )

    def to_strings(self):
        return [[str(x) for x in r] for r in self.rows]

    def __eq__(self, other):
        if not isinstance(other, SqMatrix):
            return NotImplemented
        return self.ring == other.ring and self.rows == other.rows

    def __hash__(self):
        return hash((self.ring, self.rows))

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __add__(self, other):
        _check(self, other)
        return SqMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                        self.ring)

    def __sub__(self, other):
        _check(self, other)
        return SqMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                        self.ring)

    def __neg__(self):
        return SqMatrix([[-a for a in r] for r in self.rows], self.ring)

    def scale(self, c) -> "SqMatrix":
        c = self.ring.coerce(c)
        return SqMatrix([[c * a for a in r] for r in self.rows], self.ring)

    def map(self, fn, ring: PolyRing | None = None) -> "SqMatrix":
        """Apply ``fn`` entrywise; ``ring`` is the ring of the results."""
        return SqMatrix([[fn(a) for a in r] for r in self.rows], ring or self.ring)

    def __str__(self):
        cells = self.to_strings()
        width = max(len(s) for r in cells for s in r)
        return "\n".join("[" + "  ".join(s.rjust(width) for s in r) + "]" for r in cells)

    def __repr__(self):
        return f"SqMatrix({self.to_strings()!r})"


def _check(a: SqMatrix, b: SqMatrix):
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: {a.n} vs {b.n}")
    if a.ring != b.ring:
        raise IncompatibleRingError(f"{a.ring} vs {b.ring}")


def mat_mul(a: SqMatrix, b: SqMatrix) -> SqMatrix:
    _check(a, b)
    mod = a.ring._mod
    ring = a.ring
    cols = [[x.terms for x in c] for c in zip(*b.rows)]
    out = []
    for row in a.rows:
        rt = [x.terms for x in row]
        out.append(tuple(
            RingElem(ring, kernels.poly_dot([(x, y) for x, y in zip(rt, col) if x and y], mod))
            for col in cols
        ))
    return SqMatrix._wrap(tuple(out), ring)


def _perm_sign(p) -> int:
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def det_cofactor(a: SqMatrix) -> RingElem:
    """Leibniz expansion; exact over any coefficient ring."""
    ring = a.ring
    total = ring.zero()
    for p in permutations(range(a.n)):
        term = ring.one()
        for r, c in enumerate(p):
            x = a.rows[r][c]
            if x.is_zero():
                break
            term = term * x
        else:
            total = total + term if _perm_sign(p) > 0 else total - term
    return total


def det_bareiss(a: SqMatrix) -> RingElem:
    """Fraction-free elimination.

    Over Z/m the entries are lifted to integer representatives, the
    determinant is computed over Z and reduced at the end; the determinant
    is an integer polynomial in the entries, so this commutes with reduction.
    """
    ring = a.ring
    zring = PolyRing(type(ring.coeffs)(None), ring.nvars)
    m = [[RingElem(zring, dict(x.terms)) for x in r] for r in a.rows]
    n = a.n
    sign = 1
    prev = zring.one()
    for k in range(n - 1):
        if m[k][k].is_zero():
            for r in range(k + 1, n):
                if not m[r][k].is_zero():
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return ring.zero()
        pivot = m[k][k]
        for r in range(k + 1, n):
            for c in range(k + 1, n):
                num = pivot * m[r][c] - m[r][k] * m[k][c]
                m[r][c] = exact_div(num, prev)
            m[r][k] = zring.zero()
        prev = pivot
    det = m[n - 1][n - 1]
    if sign < 0:
        det = -det
    return ring.from_terms(det.terms)


def mat_det(a: SqMatrix) -> RingElem:
    """Cofactor expansion for n <= 4, Bareiss elimination above."""
    if a.n <= 4:
        return det_cofactor(a)
    return det_bareiss(a)
