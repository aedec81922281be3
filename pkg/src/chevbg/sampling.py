"""Seeded random ring elements, generators and words for fuzzing."""

from __future__ import annotations

import random

from .chevalley import ElemGen, Word
from .ring import PolyRing, RingElem


def random_poly(rng: random.Random, ring: PolyRing, max_terms: int = 3, max_deg: int = 2,
                coeff_bound: int = 5, allow_zero: bool = True) -> RingElem:
    """Sum of up to ``max_terms`` random terms with total degree <= ``max_deg``."""
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            deg = rng.randint(0, max_deg)
            e = [0] * ring.nvars
            if ring.nvars:
                for _ in range(deg):
                    e[rng.randrange(ring.nvars)] += 1
            c = rng.randint(-coeff_bound, coeff_bound)
            terms[tuple(e)] = terms.get(tuple(e), 0) + c
        p = ring.from_terms(terms)
        if allow_zero or not p.is_zero():
            return p


def random_elem_gen(rng: random.Random, n: int, ring: PolyRing, **poly_kw) -> ElemGen:
    i, j = rng.sample(range(1, n + 1), 2)
    return ElemGen(i, j, random_poly(rng, ring, **poly_kw))


def random_word(rng: random.Random, n: int, ring: PolyRing, max_len: int = 8,
                min_len: int = 0, **poly_kw) -> Word:
    length = rng.randint(min_len, max_len)
    return Word(n, ring, [random_elem_gen(rng, n, ring, **poly_kw) for _ in range(length)])
