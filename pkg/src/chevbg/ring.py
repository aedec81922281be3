"""Exact arithmetic in R0[x1, ..., xk] with R0 the integers or Z/m.

Elements are immutable :class:`RingElem` values holding a sparse term map
from exponent tuples to nonzero coefficients.  Variables are addressed by
1-based index, matching their printed names ``x1 .. xk``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Optional

from . import kernels
from .errors import (
    IncompatibleRingError,
    IndexRangeError,
    ParseError,
    UnknownVariableError,
    UnsupportedError,
)

__all__ = [
    "CoeffSpec",
    "PolyRing",
    "RingElem",
    "poly_arith",
    "poly_subst",
    "poly_derivative",
    "parse_poly",
    "exact_div",
]


@dataclass(frozen=True)
class CoeffSpec:
    """Coefficient ring: the integers when ``modulus`` is None, else Z/modulus."""

    modulus: Optional[int] = None

    def __post_init__(self):
        if self.modulus is not None and (
            not isinstance(self.modulus, int) or self.modulus < 2
        ):
            raise ValueError(f"modulus must be an integer >= 2, got {self.modulus!r}")

    @classmethod
    def integers(cls) -> "CoeffSpec":
        return cls(None)

    @classmethod
    def mod(cls, m: int) -> "CoeffSpec":
        return cls(m)

    @classmethod
    def parse(cls, text: str) -> "CoeffSpec":
        """Inverse of ``str``: ``"ZZ"`` or ``"ZZ/m"``."""
        text = text.strip()
        if text == "ZZ":
            return cls(None)
        m = re.fullmatch(r"ZZ/(\d+)", text)
        if not m:
            raise ValueError(f"bad coefficient spec {text!r}")
        return cls(int(m.group(1)))

    @property
    def is_integers(self) -> bool:
        return self.modulus is None

    def reduce(self, c: int) -> int:
        return c % self.modulus if self.modulus else c

    def __str__(self):
        return "ZZ" if self.modulus is None else f"ZZ/{self.modulus}"


@dataclass(frozen=True)
class PolyRing:
    """The ring ``coeffs[x1, ..., x_nvars]``."""

    coeffs: CoeffSpec = CoeffSpec()
    nvars: int = 1

    def __post_init__(self):
        if self.nvars < 0:
            raise ValueError("nvars must be nonnegative")

    @property
    def _mod(self) -> int:
        return self.coeffs.modulus or 0

    def zero(self) -> "RingElem":
        return RingElem(self, {})

    def one(self) -> "RingElem":
        return self.const(1)

    def const(self, c: int) -> "RingElem":
        c = self.coeffs.reduce(int(c))
        return RingElem(self, {(0,) * self.nvars: c} if c else {})

    def var(self, t: int) -> "RingElem":
        """The variable ``x_t`` (1-based)."""
        if not 1 <= t <= self.nvars:
            raise IndexRangeError(f"variable index {t} outside 1..{self.nvars}")
        e = [0] * self.nvars
        e[t - 1] = 1
        return RingElem(self, {tuple(e): 1})

    def monomial(self, exps, coeff: int = 1) -> "RingElem":
        exps = tuple(int(x) for x in exps)
        if len(exps) != self.nvars or any(x < 0 for x in exps):
            raise ValueError(f"bad exponent vector {exps} for {self.nvars} variables")
        c = self.coeffs.reduce(int(coeff))
        return RingElem(self, {exps: c} if c else {})

    def from_terms(self, terms: Mapping) -> "RingElem":
        """Build an element from an arbitrary term map, canonicalizing it."""
        acc: dict = {}
        for e, c in terms.items():
            e = tuple(int(x) for x in e)
            if len(e) != self.nvars or any(x < 0 for x in e):
                raise ValueError(f"bad exponent vector {e} for {self.nvars} variables")
            acc[e] = acc.get(e, 0) + int(c)
        mod = self._mod
        return RingElem(self, {e: (c % mod if mod else c) for e, c in acc.items()
                               if (c % mod if mod else c)})

    def coerce(self, x) -> "RingElem":
        if isinstance(x, RingElem):
            if x.ring != self:
                raise IncompatibleRingError(f"{x.ring} is not {self}")
            return x
        if isinstance(x, int):
            return self.const(x)
        if isinstance(x, str):
            return parse_poly(x, self.nvars, self.coeffs)
        raise TypeError(f"cannot coerce {type(x).__name__} into {self}")

    def __str__(self):
        names = ",".join(f"x{t}" for t in range(1, self.nvars + 1))
        return f"{self.coeffs}[{names}]"


class RingElem:
    """Immutable sparse polynomial.

    ``terms`` must already be canonical (no zero coefficients, reduced
    modulo m); use :meth:`PolyRing.from_terms` for untrusted input.
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- predicates -----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return len(self.terms) == 1 and self.terms.get((0,) * self.ring.nvars) == 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.ring.nvars, 0)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def __bool__(self):
        return bool(self.terms)

    # -- arithmetic -----------------------------------------------------
    def _other(self, other) -> Optional["RingElem"]:
        if isinstance(other, RingElem):
            if other.ring != self.ring:
                raise IncompatibleRingError(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return RingElem(self.ring, kernels.poly_add(self.terms, o.terms, self.ring._mod))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return RingElem(self.ring, kernels.poly_sub(self.terms, o.terms, self.ring._mod))

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        mod = self.ring._mod
        if mod:
            return RingElem(self.ring, {e: (-c) % mod for e, c in self.terms.items()})
        return RingElem(self.ring, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return RingElem(self.ring, kernels.poly_mul(self.terms, o.terms, self.ring._mod))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def addmul(self, a: "RingElem", b: "RingElem") -> "RingElem":
        """``self + a*b`` with a single accumulation pass."""
        if a.ring != self.ring or b.ring != self.ring:
            raise IncompatibleRingError("addmul operands differ in ring")
        return RingElem(self.ring, kernels.poly_addmul(self.terms, a.terms, b.terms,
                                                       self.ring._mod))

    # -- comparison -----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, RingElem):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, int):
            return self.terms == self.ring.const(other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # -- printing -------------------------------------------------------
    def sorted_terms(self):
        """Terms in descending lexicographic order of exponent vectors."""
        return sorted(self.terms.items(), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for idx, (e, c) in enumerate(self.sorted_terms()):
            mono = "*".join(
                f"x{t + 1}" if x == 1 else f"x{t + 1}^{x}" for t, x in enumerate(e) if x
            )
            sign = "-" if c < 0 else ("+" if idx else "")
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            out.append(sign + body)
        return "".join(out)

    def __repr__(self):
        return f"RingElem({str(self)!r}, {self.ring})"


def _check_same(p: RingElem, q: RingElem):
    if p.ring != q.ring:
        raise IncompatibleRingError(f"{p.ring} vs {q.ring}")


def poly_arith(op: str, p: RingElem, q: Optional[RingElem] = None) -> RingElem:
    """Functional form of ``add``, ``mul`` and ``neg``."""
    if op == "neg":
        if q is not None:
            raise ValueError("neg takes a single operand")
        return -p
    if q is None:
        raise ValueError(f"{op} needs two operands")
    _check_same(p, q)
    if op == "add":
        return p + q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown op {op!r}")


def poly_subst(p: RingElem, assignment: Mapping[int, object]) -> RingElem:
    """Substitute ring elements (or ints) for variables given by 1-based index.

    Unassigned variables stay symbolic.  The result lives in ``p.ring``.
    """
    ring = p.ring
    values = {}
    for t, val in assignment.items():
        if not isinstance(t, int) or not 1 <= t <= ring.nvars:
            raise IndexRangeError(f"variable index {t} outside 1..{ring.nvars}")
        values[t - 1] = ring.coerce(val)
    if not values:
        return p
    powers: dict = {}

    def power(t, x):
        key = (t, x)
        if key not in powers:
            powers[key] = values[t] ** x
        return powers[key]

    mod = ring._mod
    acc: dict = {}
    for e, c in p.terms.items():
        rest = tuple(0 if t in values else x for t, x in enumerate(e))
        term = RingElem(ring, {rest: c})
        for t, x in enumerate(e):
            if x and t in values:
                term = term * power(t, x)
        acc = kernels.poly_add(acc, term.terms, mod)
    return RingElem(ring, acc)


def poly_derivative(p: RingElem, var: int) -> RingElem:
    """Formal partial derivative with respect to ``x_var`` (1-based)."""
    ring = p.ring
    if not isinstance(var, int) or not 1 <= var <= ring.nvars:
        raise IndexRangeError(f"variable index {var} outside 1..{ring.nvars}")
    t = var - 1
    acc = {}
    for e, c in p.terms.items():
        if e[t]:
            acc[e[:t] + (e[t] - 1,) + e[t + 1:]] = c * e[t]
    return ring.from_terms(acc)


def exact_div(p: RingElem, q: RingElem) -> RingElem:
    """Quotient of an exact division over the integers.

    Raises ``ValueError`` when ``q`` does not divide ``p``.
    """
    _check_same(p, q)
    if not p.ring.coeffs.is_integers:
        raise UnsupportedError("exact division is only implemented over ZZ")
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    ring = p.ring
    lq = max(q.terms)
    cq = q.terms[lq]
    rem = p.terms
    quot = {}
    while rem:
        lr = max(rem)
        cr = rem[lr]
        shift = tuple(a - b for a, b in zip(lr, lq))
        if any(s < 0 for s in shift) or cr % cq:
            raise ValueError(f"{q} does not divide {p}")
        c = cr // cq
        quot[shift] = c
        rem = kernels.poly_sub(rem, kernels.poly_mul({shift: c}, q.terms, 0), 0)
    return RingElem(ring, quot)


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>[A-Za-z_]\w*)|(?P<op>[-+*^()]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        start = m.start(m.lastgroup)
        tokens.append((m.lastgroup, m.group(m.lastgroup), start))
        pos = m.end()
    tokens.append(("end", "", n))
    return tokens


class _PolyParser:
    def __init__(self, text: str, ring: PolyRing):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return ParseError(msg, self.text, tok[2])

    def parse(self) -> RingElem:
        if self.peek()[0] == "end":
            raise self.error("empty polynomial")
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise self.error(f"unexpected {tok[1]!r}")
        return value

    def expr(self) -> RingElem:
        value = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> RingElem:
        value = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            value = value * self.factor()
        tok = self.peek()
        if tok[0] in ("int", "var") or tok[1] == "(":
            raise self.error("missing '*' between factors")
        return value

    def factor(self) -> RingElem:
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "-":
            self.take()
            return -self.factor()
        return self.power()

    def power(self) -> RingElem:
        base = self.atom()
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "^":
            self.take()
            exp = self.take()
            if exp[0] != "int":
                raise self.error("exponent must be a nonnegative integer literal", exp)
            base = base ** int(exp[1])
            nxt = self.peek()
            if nxt[0] == "op" and nxt[1] == "^":
                raise self.error("chained '^' is not allowed")
        return base

    def atom(self) -> RingElem:
        tok = self.take()
        kind, val, _ = tok
        if kind == "int":
            return self.ring.const(int(val))
        if kind == "var":
            m = re.fullmatch(r"x([1-9]\d*)", val)
            if not m or not 1 <= int(m.group(1)) <= self.ring.nvars:
                raise UnknownVariableError(
                    f"unknown variable {val!r} (ring has x1..x{self.ring.nvars})",
                    self.text, tok[2])
            return self.ring.var(int(m.group(1)))
        if kind == "op" and val == "(":
            value = self.expr()
            close = self.take()
            if close[1] != ")":
                raise self.error("expected ')'", close)
            return value
        if kind == "end":
            raise self.error("unexpected end of input", tok)
        raise self.error(f"unexpected {val!r}", tok)


def parse_poly(text: str, k: int, spec: CoeffSpec = CoeffSpec()) -> RingElem:
    """Parse ``text`` as an element of ``spec[x1..xk]``.

    >>> str(parse_poly("(x1+1)*(x1-1)", 1))
    'x1^2-1'
    """
    return _PolyParser(text, PolyRing(spec, k)).parse()
