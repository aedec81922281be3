"""The derivation cocycle ``g -> g'(0)`` on matrices over Z[x].

``pi`` denotes substitution ``x = 0``.  For all ``g, h``::

    c(gh) = c(g) pi(h) + pi(g) c(h)

so ``c`` is additive on the kernel ``K = {g : pi(g) = I}``.

Samples built from words lie in the elementary subgroup E(3, Z[x]).  The
functions accept any matrix over Z[x], so nothing here distinguishes E from SL.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Tuple

from .chevalley import ElemGen, Word, word_inverse
from .errors import UnsupportedError
from .matrix import SqMatrix
from .ring import CoeffSpec, PolyRing, poly_derivative, poly_subst

__all__ = [
    "CocycleValue",
    "reduce_at_zero",
    "derivation_cocycle",
    "in_kernel",
    "cocycle_defect",
    "int_matrix",
    "kernel_word",
]

ZZ0 = PolyRing(CoeffSpec(), 0)


@dataclass(frozen=True)
class CocycleValue:
    """An ``n x n`` integer matrix under addition."""

    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        if any(len(r) != n for r in self.entries):
            raise ValueError("cocycle value must be square")
        object.__setattr__(self, "entries", tuple(tuple(int(x) for x in r) for r in self.entries))

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def zeros(cls, n: int) -> "CocycleValue":
        return cls(tuple((0,) * n for _ in range(n)))

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "CocycleValue":
        """Matrix unit ``E_{i,j}``, 1-based."""
        return cls(tuple(tuple(int(r == i - 1 and c == j - 1) for c in range(n))
                         for r in range(n)))

    def __add__(self, other: "CocycleValue") -> "CocycleValue":
        return CocycleValue(tuple(tuple(a + b for a, b in zip(r, s))
                                  for r, s in zip(self.entries, other.entries)))

    def __sub__(self, other: "CocycleValue") -> "CocycleValue":
        return CocycleValue(tuple(tuple(a - b for a, b in zip(r, s))
                                  for r, s in zip(self.entries, other.entries)))

    def __neg__(self) -> "CocycleValue":
        return CocycleValue(tuple(tuple(-a for a in r) for r in self.entries))

    def __mul__(self, k: int) -> "CocycleValue":
        return CocycleValue(tuple(tuple(k * a for a in r) for r in self.entries))

    __rmul__ = __mul__

    def __matmul__(self, other: "CocycleValue") -> "CocycleValue":
        cols = list(zip(*other.entries))
        return CocycleValue(tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols)
                                  for r in self.entries))

    def max_abs(self) -> int:
        return max((abs(x) for r in self.entries for x in r), default=0)

    def is_zero(self) -> bool:
        return not any(x for r in self.entries for x in r)

    def tolist(self):
        return [list(r) for r in self.entries]


def _check_zx(g: SqMatrix):
    if g.ring.nvars != 1 or not g.ring.coeffs.is_integers:
        raise UnsupportedError(f"the derivation cocycle is defined on ZZ[x], got {g.ring}")


def reduce_at_zero(g: SqMatrix) -> SqMatrix:
    """Entrywise ``x = 0``; the result is a matrix over ZZ (no variables)."""
    _check_zx(g)
    return g.map(lambda p: ZZ0.const(poly_subst(p, {1: 0}).constant_term()), ZZ0)


def int_matrix(m: SqMatrix) -> CocycleValue:
    """Constant terms of a matrix with constant entries, as integers."""
    if any(not x.is_constant() for r in m.rows for x in r):
        raise ValueError("matrix has non-constant entries")
    return CocycleValue(tuple(tuple(x.constant_term() for x in r) for r in m.rows))


def derivation_cocycle(g: SqMatrix) -> CocycleValue:
    _check_zx(g)
    return CocycleValue(tuple(
        tuple(poly_derivative(p, 1).constant_term() for p in r) for r in g.rows))


def in_kernel(g: SqMatrix) -> bool:
    return reduce_at_zero(g).is_identity()


def cocycle_defect(cmap: Callable[[SqMatrix], CocycleValue],
                   samples: Iterable[Tuple[SqMatrix, SqMatrix]]) -> int:
    """``max ||c(gh) - c(g) pi(h) - pi(g) c(h)||`` with the max-entry norm.

    0 for an empty sample set.
    """
    worst = 0
    for g, h in samples:
        pg, ph = int_matrix(reduce_at_zero(g)), int_matrix(reduce_at_zero(h))
        gh = g @ h
        err = cmap(gh) - cmap(g) @ ph - pg @ cmap(h)
        worst = max(worst, err.max_abs())
    return worst


def kernel_word(w: Word) -> Word:
    """``w`` followed by the inverse of its letterwise reduction at ``x = 0``.

    The result always evaluates into ``K``.
    """
    if w.ring.nvars != 1 or not w.ring.coeffs.is_integers:
        raise UnsupportedError(f"kernel words are built over ZZ[x], got {w.ring}")
    reduced = Word(w.n, w.ring, [ElemGen(g.i, g.j, w.ring.const(g.a.constant_term()))
                                 for g in w.gens])
    return w + word_inverse(reduced)
