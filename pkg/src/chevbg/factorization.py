"""Bounded-length factorization of conjugated elementary matrices.

For ``s = e_{i,j}(a)`` and ``g`` in ``E(n, A)``::

    g s g^-1 = I + v w,    v = column i of g,    w = a * (row j of g^-1)

With ``gr`` the i-th row of ``g^-1`` we have ``gr . v = 1`` and ``w . v = 0``,
so ``b_{l,m} = w_l gr_m - w_m gr_l`` satisfies
``w = sum_{l<m} b_{l,m} (v_m e_l - v_l e_m)`` and ``I + v w`` is the
product over ``l < m`` of the rank-one factors
``I + v b_{l,m} (v_m e_l - v_l e_m)^T``; the cross terms vanish, so the
order does not matter.

Each factor ``I + b v u^T`` (``u = v_m e_l - v_l e_m``) is written with at
most ``2n + 4`` letters.  Split ``v = v' + v''`` with ``v'`` supported on
``{l, m}``.  Since ``u . v'' = 0``::

    I + b v u^T = (I + b v' u^T)(I + b v'' u^T)

The second factor is ``prod_{p not in {l,m}} e_{p,l}(b v_p v_m) e_{p,m}(-b v_p v_l)``
(``2(n-2)`` commuting letters).  For the first, take a spare index ``q``
and ``x = v_l``, ``y = v_m``::

    I + b v' u^T = [ e_{l,q}(x) e_{m,q}(y),  e_{q,l}(b y) e_{q,m}(-b x) ]

an 8-letter commutator.  When ``y = 0`` the core is the single letter
``e_{l,m}(-b x^2)``, when ``x = 0`` it is ``e_{m,l}(b y^2)``.  Letters
with a zero parameter are never emitted.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Dict, Sequence, Tuple

from .chevalley import ElemGen, Word, elem_matrix, spare_index, word_eval, word_inverse
from .errors import ConstructionError, IndexRangeError, UnsupportedError
from .matrix import SqMatrix, mat_mul
from .ring import CoeffSpec, PolyRing, RingElem

__all__ = [
    "Verdict",
    "RankOneData",
    "MennickeFactor",
    "FactorizationWitness",
    "rank_one_data",
    "mennicke_coeffs",
    "reconstruct_w",
    "factor_matrix",
    "factor_mennicke",
    "conj_decompose",
    "verify_witness",
    "mennicke_bound",
    "conjugate_bound",
    "witness_to_json",
    "witness_from_json",
]

SCHEMA_VERSION = 1


def mennicke_bound(n: int) -> int:
    """Letters per rank-one factor: 8 + 2(n - 2)."""
    return 8 + 2 * (n - 2)


def conjugate_bound(n: int) -> int:
    """Letters for a whole conjugate: (n + 2) n (n - 1)."""
    return (n + 2) * n * (n - 1)


class Verdict(str, enum.Enum):
    YES = "yes"
    NO = "no"
    UNCHECKED = "unchecked"


def _dot(x: Sequence[RingElem], y: Sequence[RingElem]) -> RingElem:
    acc = x[0].ring.zero()
    for a, b in zip(x, y):
        acc = acc.addmul(a, b)
    return acc


@dataclass(frozen=True)
class RankOneData:
    v: Tuple[RingElem, ...]
    w: Tuple[RingElem, ...]
    gamma_row: Tuple[RingElem, ...]

    def __post_init__(self):
        if not (len(self.v) == len(self.w) == len(self.gamma_row)):
            raise ValueError("rank-one data vectors differ in length")
        if not _dot(self.gamma_row, self.v).is_one():
            raise ValueError("gamma_row . v != 1")
        if not _dot(self.w, self.v).is_zero():
            raise ValueError("w . v != 0")

    @property
    def n(self) -> int:
        return len(self.v)

    @property
    def ring(self) -> PolyRing:
        return self.v[0].ring


@dataclass(frozen=True)
class MennickeFactor:
    """The matrix ``I + v b (v_m e_l - v_l e_m)^T``; ``l < m`` are 1-based."""

    v: Tuple[RingElem, ...]
    b: RingElem
    l: int
    m: int

    def __post_init__(self):
        if not 1 <= self.l < self.m <= len(self.v):
            raise IndexRangeError(f"need 1 <= l < m <= {len(self.v)}, got ({self.l},{self.m})")

    @property
    def n(self) -> int:
        return len(self.v)

    def direction(self) -> Tuple[RingElem, ...]:
        """The row vector ``v_m e_l - v_l e_m``."""
        ring = self.b.ring
        u = [ring.zero()] * self.n
        u[self.l - 1] = self.v[self.m - 1]
        u[self.m - 1] = -self.v[self.l - 1]
        return tuple(u)


def factor_matrix(f: MennickeFactor) -> SqMatrix:
    u = f.direction()
    ring = f.b.ring
    rows = []
    for r in range(f.n):
        coef = f.v[r] * f.b
        rows.append([(ring.one() if r == c else ring.zero()) + coef * u[c]
                     for c in range(f.n)])
    return SqMatrix(rows, ring)


def rank_one_data(gamma: Word, i: int, j: int, a: RingElem) -> RankOneData:
    n = gamma.n
    if n < 3:
        raise UnsupportedError("conjugate factorization needs n >= 3")
    if i == j:
        raise ValueError("need i != j")
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexRangeError(f"({i},{j}) outside 1..{n}")
    a = gamma.ring.coerce(a)
    g = word_eval(gamma)
    ginv = word_eval(word_inverse(gamma))
    v = g.column(i)
    w = tuple(a * x for x in ginv.row(j))
    return RankOneData(v, w, ginv.row(i))


def mennicke_coeffs(d: RankOneData) -> Dict[Tuple[int, int], RingElem]:
    """``b_{l,m} = w_l gr_m - w_m gr_l`` for ``1 <= l < m <= n``, keyed 1-based."""
    w, gr = d.w, d.gamma_row
    out = {}
    for l in range(1, d.n + 1):
        for m in range(l + 1, d.n + 1):
            out[(l, m)] = w[l - 1] * gr[m - 1] - w[m - 1] * gr[l - 1]
    return out


def reconstruct_w(v: Sequence[RingElem], coeffs: Dict[Tuple[int, int], RingElem]):
    """``sum_{l<m} b_{l,m} (v_m e_l - v_l e_m)``."""
    ring = v[0].ring
    w = [ring.zero() for _ in v]
    for (l, m), b in coeffs.items():
        w[l - 1] = w[l - 1].addmul(b, v[m - 1])
        w[m - 1] = w[m - 1] - b * v[l - 1]
    return tuple(w)


def factor_mennicke(f: MennickeFactor) -> Word:
    n, v, b, l, m = f.n, f.v, f.b, f.l, f.m
    ring = b.ring
    if n < 3:
        raise UnsupportedError("Mennicke factorization needs n >= 3")
    letters = []

    def emit(i, j, p):
        if not p.is_zero():
            letters.append(ElemGen(i, j, p))

    if not b.is_zero():
        x, y = v[l - 1], v[m - 1]
        if y.is_zero():
            emit(l, m, -(b * x * x))
        elif x.is_zero():
            emit(m, l, b * y * y)
        else:
            q = spare_index(n, l, m)
            by, bx = b * y, b * x
            emit(l, q, x)
            emit(m, q, y)
            emit(q, l, by)
            emit(q, m, -bx)
            emit(l, q, -x)
            emit(m, q, -y)
            emit(q, l, -by)
            emit(q, m, bx)
        for p in range(1, n + 1):
            if p in (l, m) or v[p - 1].is_zero():
                continue
            bvp = b * v[p - 1]
            emit(p, l, bvp * y)
            emit(p, m, -(bvp * x))
    word = Word(n, ring, letters)
    if len(word) > mennicke_bound(n):
        raise ConstructionError(f"factor word has {len(word)} > {mennicke_bound(n)} letters")
    return word


@dataclass
class FactorizationWitness:
    target: SqMatrix
    word: Word
    claimed_bound: int
    verified: Verdict = Verdict.UNCHECKED
    # per-(l, m) letter counts, in emission order; not serialized
    factor_lengths: Tuple[Tuple[Tuple[int, int], int], ...] = field(default=(), compare=False)

    @property
    def n(self) -> int:
        return self.target.n

    @property
    def ring(self) -> PolyRing:
        return self.target.ring


def verify_witness(wit: FactorizationWitness) -> Verdict:
    """Re-multiply the word and compare; the construction is never trusted."""
    if len(wit.word) > wit.claimed_bound:
        return Verdict.NO
    if wit.word.n != wit.target.n or wit.word.ring != wit.target.ring:
        return Verdict.NO
    return Verdict.YES if word_eval(wit.word) == wit.target else Verdict.NO


def conj_decompose(gamma: Word, i: int, j: int, a) -> FactorizationWitness:
    n = gamma.n
    a = gamma.ring.coerce(a)
    d = rank_one_data(gamma, i, j, a)
    coeffs = mennicke_coeffs(d)
    target = mat_mul(mat_mul(word_eval(gamma), elem_matrix(ElemGen(i, j, a), n)),
                     word_eval(word_inverse(gamma)))
    word = Word(n, gamma.ring)
    lengths = []
    for (l, m), b in sorted(coeffs.items()):
        piece = factor_mennicke(MennickeFactor(d.v, b, l, m))
        lengths.append(((l, m), len(piece)))
        word = word + piece
    bound = conjugate_bound(n)
    assert mennicke_bound(n) * n * (n - 1) // 2 == bound
    wit = FactorizationWitness(target, word, bound, factor_lengths=tuple(lengths))
    wit.verified = verify_witness(wit)
    return wit


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------

def witness_to_dict(wit: FactorizationWitness) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "dimension": wit.n,
        "ring": {"k": wit.ring.nvars, "coeff": str(wit.ring.coeffs)},
        "target": wit.target.to_strings(),
        "word": wit.word.tokens(),
        "claimed_bound": wit.claimed_bound,
        "verified": Verdict(wit.verified).value,
    }


def witness_to_json(wit: FactorizationWitness) -> str:
    return json.dumps(witness_to_dict(wit), indent=2) + "\n"


def witness_from_dict(doc: dict) -> FactorizationWitness:
    """Rebuild a witness; ``verified`` is carried over as recorded, not trusted."""
    from .grammar import parse_word

    try:
        n = int(doc["dimension"])
        ring = PolyRing(CoeffSpec.parse(doc["ring"]["coeff"]), int(doc["ring"]["k"]))
        target = SqMatrix.from_strings(doc["target"], ring)
        tokens = doc["word"]
        bound = int(doc["claimed_bound"])
        verdict = Verdict(doc.get("verified", "unchecked"))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed witness document: {exc!r}") from exc
    if not isinstance(tokens, list):
        raise ValueError("witness word must be a list of tokens")
    if target.n != n:
        raise ValueError(f"target is {target.n}x{target.n}, dimension says {n}")
    word = parse_word(" ".join(tokens), n, ring)
    return FactorizationWitness(target, word, bound, verdict)


def witness_from_json(text: str) -> FactorizationWitness:
    return witness_from_dict(json.loads(text))
