"""Text form of group words.

A word is a whitespace-separated sequence of tokens.  Type A tokens are
``E(i,j;poly)``; symplectic tokens are ``SpL(i,j;poly)``, ``SpU(i;poly)``,
``SpD(i;poly)``, ``SpM+(i,j;poly)`` and ``SpM-(i,j;poly)``.  Polynomials
follow :func:`chevbg.ring.parse_poly`; errors carry positions in the full
input text.
"""

from __future__ import annotations

import re
from typing import List, Tuple

from .chevalley import ElemGen, Word
from .errors import ParseError
from .ring import PolyRing, _PolyParser
from .symplectic import SpGen

_HEAD = re.compile(r"(SpM\+|SpM-|SpL|SpU|SpD|E)\(")
_KIND = {"E": "E", "SpL": "L", "SpU": "U", "SpD": "D", "SpM+": "M+", "SpM-": "M-"}


def _scan(text: str) -> List[Tuple[str, Tuple[int, ...], int, int, int]]:
    """Split into ``(head, indices, poly_start, poly_end, token_start)``."""
    out = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            return out
        m = _HEAD.match(text, pos)
        if not m:
            raise ParseError("expected a generator token such as E(i,j;poly)", text, pos)
        start = pos
        head = m.group(1)
        semi = text.find(";", m.end())
        if semi < 0:
            raise ParseError("missing ';' in generator token", text, m.end())
        idx_text = text[m.end():semi]
        if not re.fullmatch(r"\s*\d+\s*(,\s*\d+\s*)?", idx_text):
            raise ParseError(f"bad index list {idx_text!r}", text, m.end())
        indices = tuple(int(x) for x in idx_text.split(","))
        depth = 0
        k = semi + 1
        while k < n:
            ch = text[k]
            if ch == "(":
                depth += 1
            elif ch == ")":
                if depth == 0:
                    break
                depth -= 1
            k += 1
        else:
            raise ParseError("unterminated generator token", text, start)
        out.append((head, indices, semi + 1, k, start))
        pos = k + 1
        if pos < n and not text[pos].isspace():
            raise ParseError("tokens must be separated by whitespace", text, pos)


def _param(text: str, lo: int, hi: int, ring: PolyRing):
    try:
        return _PolyParser(text[lo:hi], ring).parse()
    except ParseError as exc:
        raise type(exc)(exc.message, text, lo + exc.pos) from None


def parse_word(text: str, n: int, ring: PolyRing) -> Word:
    """Parse a type A word of dimension ``n``."""
    gens = []
    for head, idx, lo, hi, start in _scan(text):
        if head != "E":
            raise ParseError(f"{head} token in a type A word", text, start)
        if len(idx) != 2:
            raise ParseError("E(i,j;poly) needs two indices", text, start)
        i, j = idx
        if i == j or not (1 <= i <= n and 1 <= j <= n):
            raise ParseError(f"indices ({i},{j}) invalid for dimension {n}", text, start)
        gens.append(ElemGen(i, j, _param(text, lo, hi, ring)))
    return Word(n, ring, gens)


def parse_sp_word(text: str, n: int, ring: PolyRing) -> List[SpGen]:
    """Parse a symplectic word of half-dimension ``n``."""
    gens = []
    for head, idx, lo, hi, start in _scan(text):
        kind = _KIND[head]
        if kind == "E":
            raise ParseError("E token in a symplectic word", text, start)
        want = 1 if kind in ("U", "D") else 2
        if len(idx) != want:
            raise ParseError(f"{head} takes {want} index(es)", text, start)
        a = _param(text, lo, hi, ring)
        try:
            gens.append(SpGen(kind, n, idx[0], a, idx[1] if want == 2 else 0))
        except (ValueError, IndexError) as exc:
            raise ParseError(str(exc), text, start) from None
    return gens


def word_kind(text: str) -> str:
    """``"A"``, ``"C"`` or ``"empty"`` by the first token's head."""
    toks = _scan(text)
    if not toks:
        return "empty"
    return "A" if toks[0][0] == "E" else "C"


def max_index(text: str) -> int:
    """Largest index mentioned by any token (0 for the empty word)."""
    return max((max(idx) for _, idx, _, _, _ in _scan(text)), default=0)
