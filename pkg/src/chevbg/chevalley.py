"""Type-A elementary generators, words, and the commutator relation.

Indices are 1-based throughout.  ``e_{i,j}(a)`` is the identity plus ``a``
in position ``(i, j)``; a :class:`Word` is a finite product of these,
evaluated left to right.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

from .errors import IndexRangeError, UnsupportedError
from .matrix import SqMatrix
from .ring import PolyRing, RingElem
from . import kernels

__all__ = [
    "ElemGen",
    "Word",
    "NON_COMMUTING",
    "elem_matrix",
    "word_eval",
    "word_inverse",
    "commutator_word",
    "chevalley_commutator",
    "normalize_word",
    "genset",
    "in_genset",
    "rewrite_over_finite_genset",
    "minimal_subring_generators",
    "spare_index",
    "commutator_relations_fuzz",
]


@dataclass(frozen=True)
class ElemGen:
    i: int
    j: int
    a: RingElem

    def __post_init__(self):
        if self.i == self.j:
            raise ValueError(f"elementary generator needs i != j, got ({self.i},{self.j})")
        if self.i < 1 or self.j < 1:
            raise IndexRangeError(f"indices are 1-based, got ({self.i},{self.j})")

    def inverse(self) -> "ElemGen":
        return ElemGen(self.i, self.j, -self.a)

    def token(self) -> str:
        return f"E({self.i},{self.j};{self.a})"

    def __str__(self):
        return self.token()


class Word:
    """A sequence of elementary generators in ``E(n, ring)``."""

    __slots__ = ("n", "ring", "gens")

    def __init__(self, n: int, ring: PolyRing, gens: Iterable[ElemGen] = ()):
        gens = tuple(gens)
        for g in gens:
            if g.i > n or g.j > n:
                raise IndexRangeError(f"{g} does not fit in dimension {n}")
            if g.a.ring != ring:
                raise ValueError(f"{g} has parameter outside {ring}")
        self.n = n
        self.ring = ring
        self.gens = gens

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __getitem__(self, idx):
        return self.gens[idx]

    def __add__(self, other: "Word") -> "Word":
        if other.n != self.n or other.ring != self.ring:
            raise ValueError("cannot concatenate words over different groups")
        return Word(self.n, self.ring, self.gens + other.gens)

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return (self.n, self.ring, self.gens) == (other.n, other.ring, other.gens)

    def __hash__(self):
        return hash((self.n, self.ring, self.gens))

    def tokens(self) -> list:
        return [g.token() for g in self.gens]

    def __str__(self):
        return " ".join(self.tokens())

    def __repr__(self):
        return f"Word(n={self.n}, [{self}])"


# sentinel for the pair e_{ij}, e_{ji}, which has no elementary commutator formula
class _NonCommuting:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "NON_COMMUTING"

    def __bool__(self):
        return False


NON_COMMUTING = _NonCommuting()


def elem_matrix(g: ElemGen, n: int) -> SqMatrix:
    if g.i > n or g.j > n:
        raise IndexRangeError(f"{g} does not fit in dimension {n}")
    ring = g.a.ring
    one, zero = ring.one(), ring.zero()
    rows = [[one if r == c else zero for c in range(n)] for r in range(n)]
    rows[g.i - 1][g.j - 1] = g.a
    return SqMatrix._wrap(tuple(tuple(r) for r in rows), ring)


def word_eval(w: Word) -> SqMatrix:
    """Left-to-right product.

    Right multiplication by ``e_{i,j}(a)`` adds ``a`` times column ``i`` to
    column ``j``, which is all that is done per letter.
    """
    n, ring = w.n, w.ring
    mod = ring._mod
    one = ring.one().terms
    cols = [[one if r == c else {} for r in range(n)] for c in range(n)]
    for g in w.gens:
        a = g.a.terms
        if not a:
            continue
        src = cols[g.i - 1]
        dst = cols[g.j - 1]
        for r in range(n):
            if src[r]:
                dst[r] = kernels.poly_addmul(dst[r], src[r], a, mod)
    rows = tuple(tuple(RingElem(ring, cols[c][r]) for c in range(n)) for r in range(n))
    return SqMatrix._wrap(rows, ring)


def word_inverse(w: Word) -> Word:
    return Word(w.n, w.ring, (g.inverse() for g in reversed(w.gens)))


def commutator_word(g1: ElemGen, g2: ElemGen) -> Tuple[ElemGen, ...]:
    """The four letters of ``[g1, g2] = g1 g2 g1^-1 g2^-1``."""
    return (g1, g2, g1.inverse(), g2.inverse())


def chevalley_commutator(g1: ElemGen, g2: ElemGen, n: Optional[int] = None):
    """Closed form of ``[g1, g2]`` as a tuple of generators.

    Returns ``NON_COMMUTING`` for the pair ``e_{i,j}, e_{j,i}``.
    """
    if n is not None:
        for g in (g1, g2):
            if g.i > n or g.j > n:
                raise IndexRangeError(f"{g} does not fit in dimension {n}")
    if g1.a.ring != g2.a.ring:
        raise ValueError("generators over different rings")
    i, j, a1 = g1.i, g1.j, g1.a
    k, l, a2 = g2.i, g2.j, g2.a
    if j == k and i == l:
        return NON_COMMUTING
    if j == k:
        return (ElemGen(i, l, a1 * a2),)
    if i == l:
        return (ElemGen(k, j, -(a2 * a1)),)
    return ()


def normalize_word(w: Word) -> Word:
    """Merge adjacent letters on the same root and drop zero parameters.

    Only called on request; witness words are never normalized implicitly.
    """
    out: list = []
    for g in w.gens:
        if out and (out[-1].i, out[-1].j) == (g.i, g.j):
            merged = out[-1].a + g.a
            out.pop()
            if not merged.is_zero():
                out.append(ElemGen(g.i, g.j, merged))
        elif not g.a.is_zero():
            out.append(g)
    return Word(w.n, w.ring, out)


def genset(n: int, ring: PolyRing) -> frozenset:
    """The finite set {e_ij(+-1), e_ij(+-x_t)} as (i, j, parameter) triples."""
    params = [ring.one(), -ring.one()]
    for t in range(1, ring.nvars + 1):
        params += [ring.var(t), -ring.var(t)]
    return frozenset(
        (i, j, p)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if i != j
        for p in params
    )


def in_genset(g: ElemGen, n: int) -> bool:
    if not (1 <= g.i <= n and 1 <= g.j <= n):
        return False
    a = g.a
    if len(a.terms) != 1:
        return False
    (e, c), = a.terms.items()
    if sum(e) > 1 or any(x > 1 for x in e):
        return False
    ring = a.ring
    return c == 1 or c == ring.coeffs.reduce(-1)


def spare_index(n: int, *used: int) -> int:
    for p in range(1, n + 1):
        if p not in used:
            return p
    raise UnsupportedError(f"no spare index in dimension {n}")


# Coefficients of absolute value at most this are written as repeated
# +-1 letters; larger ones go through the base-16 commutator split.
REPEAT_LIMIT = 16


def _signed_rep(c: int, ring: PolyRing) -> int:
    m = ring.coeffs.modulus
    if m and c > m // 2:
        return c - m
    return c


def _monomial_word(i: int, j: int, factors: Tuple[int, ...], sign: int, n: int,
                   ring: PolyRing) -> list:
    """Letters from the finite set realizing ``e_{i,j}(sign * prod x_t)``."""
    if len(factors) <= 1:
        p = ring.var(factors[0]) if factors else ring.one()
        return [ElemGen(i, j, p if sign > 0 else -p)]
    p = spare_index(n, i, j)
    head = ring.var(factors[0])
    head = head if sign > 0 else -head
    left = [ElemGen(i, p, head)]
    right = _monomial_word(p, j, factors[1:], 1, n, ring)
    left_inv = [ElemGen(i, p, -head)]
    right_inv = [g.inverse() for g in reversed(right)]
    return left + right + left_inv + right_inv


def _scaled_word(i: int, j: int, c: int, factors: Tuple[int, ...], n: int,
                 ring: PolyRing) -> list:
    """Letters realizing ``e_{i,j}(c * prod x_t)`` for an integer ``c``."""
    if c == 0:
        return []
    if abs(c) <= REPEAT_LIMIT:
        sign = 1 if c > 0 else -1
        return _monomial_word(i, j, factors, sign, n, ring) * abs(c)
    # c = 16*q + r with |r| < 16 and sign(r) = sign(c);
    # e_ij(16 q m) = [e_ip(q), e_pj(16 m)].
    q, r = divmod(abs(c), REPEAT_LIMIT)
    sign = 1 if c > 0 else -1
    q, r = sign * q, sign * r
    p = spare_index(n, i, j)
    left = _scaled_word(i, p, q, (), n, ring)
    right = _scaled_word(p, j, REPEAT_LIMIT, factors, n, ring)
    inv = lambda letters: [g.inverse() for g in reversed(letters)]  # noqa: E731
    return left + right + inv(left) + inv(right) + _scaled_word(i, j, r, factors, n, ring)


def rewrite_over_finite_genset(g: ElemGen, n: int) -> Word:
    """Rewrite ``g`` as a word over the standard finite generating set.

    Each term ``c * x_t1 ... x_td`` of the parameter is handled separately
    (root subgroups are additive).  A monomial of degree ``d >= 2`` is the
    commutator ``[e_{i,p}(x_t1), e_{p,j}(x_t2 ... x_td)]`` with ``p`` the
    smallest index outside ``{i, j}``, expanded recursively.  An integer
    coefficient ``|c| <= 16`` is ``|c|`` repetitions; beyond that
    ``c = 16 q + r`` and ``e_{i,j}(16 q m) = [e_{i,p}(q), e_{p,j}(16 m)]``.
    """
    if n < 3:
        raise UnsupportedError("rewriting needs n >= 3 for a spare index")
    if g.i > n or g.j > n:
        raise IndexRangeError(f"{g} does not fit in dimension {n}")
    ring = g.a.ring
    letters: list = []
    for e, c in g.a.sorted_terms():
        factors = tuple(t + 1 for t, x in enumerate(e) for _ in range(x))
        letters += _scaled_word(g.i, g.j, _signed_rep(c, ring), factors, n, ring)
    return Word(n, ring, letters)


def minimal_subring_generators(w: Word) -> Tuple[RingElem, ...]:
    """Distinct parameters of ``w`` in order of first appearance.

    Together with 1 they generate the smallest subring containing every
    entry of every letter.
    """
    seen = {}
    for g in w.gens:
        seen.setdefault(g.a, None)
    return tuple(seen)


def commutator_relations_fuzz(seed: int, trials: int, n_values=(3, 4, 5),
                              ring: Optional[PolyRing] = None):
    """Check ``[e_ij(a), e_jk(b)] = e_ik(ab)`` and disjoint commuting on random data.

    Returns a :class:`chevbg.symplectic.FuzzReport`.
    """
    import random

    from .sampling import random_poly
    from .symplectic import FuzzReport

    if trials < 1:
        raise ValueError("trials must be >= 1")
    ring = ring or PolyRing(nvars=1)
    rng = random.Random(seed)
    report = FuzzReport(trials)
    for t in range(trials):
        n = rng.choice(tuple(n_values))
        i, j, k = rng.sample(range(1, n + 1), 3)
        a1, a2 = random_poly(rng, ring), random_poly(rng, ring)
        g1, g2 = ElemGen(i, j, a1), ElemGen(j, k, a2)
        lhs = word_eval(Word(n, ring, commutator_word(g1, g2)))
        closed = chevalley_commutator(g1, g2, n)
        ok = lhs == word_eval(Word(n, ring, closed)) == elem_matrix(ElemGen(i, k, a1 * a2), n)
        # a pair with j != k' and i != l' must commute
        p, q = rng.choice([(p, q) for p in range(1, n + 1) for q in range(1, n + 1)
                           if p != q and p != j and q != i])
        g3 = ElemGen(p, q, a2)
        ok = ok and chevalley_commutator(g1, g3, n) == ()
        ok = ok and word_eval(Word(n, ring, commutator_word(g1, g3))).is_identity()
        report.record(ok, f"trial {t}: n={n} {g1} {g2} {g3}")
    return report
