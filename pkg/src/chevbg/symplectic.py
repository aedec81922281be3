"""Elementary symplectic generators (type C_n) as 2n x 2n matrices.

Convention: the form is ``J = [[0, I_n], [-I_n, 0]]`` and a matrix ``M`` is
symplectic when ``M^T J M = J``.  Generator kinds, with ``E`` the matrix
units of size 2n and all indices 1-based in ``1..n``:

=========  =============================================
``L``      ``I + a E_{i,j} - a E_{j+n,i+n}``      (i != j)
``U``      ``I + a E_{i,i+n}``
``D``      ``I + a E_{i+n,i}``
``M+``     ``I + a (E_{i,j+n} + E_{j,i+n})``      (i != j)
``M-``     ``I + a (E_{j+n,i} + E_{i+n,j})``      (i != j)
=========  =============================================
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, List

from .errors import IndexRangeError
from .matrix import SqMatrix, mat_det, mat_mul
from .ring import PolyRing, RingElem

__all__ = [
    "SpGen",
    "SP_KINDS",
    "form_matrix",
    "is_symplectic",
    "sp_elem_matrix",
    "sp_word_eval",
    "FuzzReport",
    "sp_relations_fuzz",
    "random_sp_gen",
]

SP_KINDS = ("L", "U", "D", "M+", "M-")
_TWO_INDEX = {"L", "M+", "M-"}
_TOKEN_HEAD = {"L": "SpL", "U": "SpU", "D": "SpD", "M+": "SpM+", "M-": "SpM-"}


@dataclass(frozen=True)
class SpGen:
    kind: str
    n: int
    i: int
    a: RingElem
    j: int = 0

    def __post_init__(self):
        if self.kind not in SP_KINDS:
            raise ValueError(f"unknown symplectic generator kind {self.kind!r}")
        if self.n < 2:
            raise ValueError("half-dimension must be >= 2")
        if not 1 <= self.i <= self.n:
            raise IndexRangeError(f"index {self.i} outside 1..{self.n}")
        if self.kind in _TWO_INDEX:
            if not 1 <= self.j <= self.n:
                raise IndexRangeError(f"index {self.j} outside 1..{self.n}")
            if self.i == self.j:
                raise ValueError(f"{self.kind} generator needs i != j")
        elif self.j:
            raise ValueError(f"{self.kind} generator takes a single index")

    def with_param(self, a: RingElem) -> "SpGen":
        return SpGen(self.kind, self.n, self.i, a, self.j)

    def inverse(self) -> "SpGen":
        return self.with_param(-self.a)

    def token(self) -> str:
        head = _TOKEN_HEAD[self.kind]
        idx = f"{self.i},{self.j}" if self.kind in _TWO_INDEX else f"{self.i}"
        return f"{head}({idx};{self.a})"

    def __str__(self):
        return self.token()


def form_matrix(n: int, ring: PolyRing) -> SqMatrix:
    one, zero = ring.one(), ring.zero()
    rows = [[zero] * (2 * n) for _ in range(2 * n)]
    for t in range(n):
        rows[t][t + n] = one
        rows[t + n][t] = -one
    return SqMatrix(rows, ring)


def is_symplectic(m: SqMatrix) -> bool:
    if m.n % 2:
        return False
    j = form_matrix(m.n // 2, m.ring)
    return mat_mul(mat_mul(m.transpose(), j), m) == j


def sp_elem_matrix(g: SpGen) -> SqMatrix:
    n, a = g.n, g.a
    ring = a.ring
    one, zero = ring.one(), ring.zero()
    rows = [[one if r == c else zero for c in range(2 * n)] for r in range(2 * n)]
    i, j = g.i - 1, g.j - 1
    if g.kind == "L":
        rows[i][j] = a
        rows[j + n][i + n] = -a
    elif g.kind == "U":
        rows[i][i + n] = a
    elif g.kind == "D":
        rows[i + n][i] = a
    elif g.kind == "M+":
        rows[i][j + n] = a
        rows[j][i + n] = a
    else:
        rows[j + n][i] = a
        rows[i + n][j] = a
    return SqMatrix(rows, ring)


def sp_word_eval(gens: Iterable[SpGen], n: int, ring: PolyRing) -> SqMatrix:
    m = SqMatrix.identity(2 * n, ring)
    for g in gens:
        if g.n != n:
            raise ValueError(f"{g} has half-dimension {g.n}, expected {n}")
        m = mat_mul(m, sp_elem_matrix(g))
    return m


def random_sp_gen(rng: random.Random, n: int, ring: PolyRing, max_deg: int = 2,
                  max_terms: int = 3, coeff_bound: int = 5) -> SpGen:
    from .sampling import random_poly

    kind = rng.choice(SP_KINDS)
    a = random_poly(rng, ring, max_terms=max_terms, max_deg=max_deg, coeff_bound=coeff_bound)
    i = rng.randint(1, n)
    if kind in _TWO_INDEX:
        j = rng.choice([t for t in range(1, n + 1) if t != i])
        return SpGen(kind, n, i, a, j)
    return SpGen(kind, n, i, a)


@dataclass
class FuzzReport:
    trials: int
    passed: int = 0
    failed: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, ok: bool, what: str):
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            self.failures.append(what)

    def as_dict(self) -> dict:
        return {"trials": self.trials, "passed": self.passed, "failed": self.failed,
                "failures": list(self.failures)}


def sp_relations_fuzz(seed: int, trials: int, n_values=(2, 3), ring: PolyRing | None = None,
                      max_len: int = 10) -> FuzzReport:
    """Random consistency checks of the C_n generator model.

    Each trial draws a pair of generators and a random product of up to
    ``max_len`` generators and checks: the form is preserved by the pair
    product, the commutator and the long product; determinants are 1;
    parameter negation inverts; parameters add within a root subgroup.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    ring = ring or PolyRing(nvars=1)
    rng = random.Random(seed)
    report = FuzzReport(trials)
    for t in range(trials):
        n = rng.choice(tuple(n_values))
        g1 = random_sp_gen(rng, n, ring)
        g2 = random_sp_gen(rng, n, ring)
        m1, m2 = sp_elem_matrix(g1), sp_elem_matrix(g2)
        ident = SqMatrix.identity(2 * n, ring)
        ok = is_symplectic(mat_mul(m1, m2))
        ok = ok and mat_mul(m1, sp_elem_matrix(g1.inverse())) == ident
        comm = sp_word_eval([g1, g2, g1.inverse(), g2.inverse()], n, ring)
        ok = ok and is_symplectic(comm)
        summed = g1.with_param(g1.a + g2.a)
        ok = ok and mat_mul(m1, sp_elem_matrix(g1.with_param(g2.a))) == sp_elem_matrix(summed)
        word = [random_sp_gen(rng, n, ring) for _ in range(rng.randint(1, max_len))]
        prod = sp_word_eval(word, n, ring)
        ok = ok and is_symplectic(prod) and mat_det(prod).is_one()
        report.record(ok, f"trial {t}: n={n} pair={g1},{g2} word={' '.join(map(str, word))}")
    return report
