"""Elementary Chevalley groups over polynomial rings and bounded-generation witnesses."""

__version__ = "0.1.0"

from .kernels import BACKEND
from .ring import CoeffSpec, PolyRing, RingElem, parse_poly, poly_arith, poly_derivative, poly_subst
from .matrix import SqMatrix, mat_det, mat_mul
from .chevalley import (
    NON_COMMUTING,
    ElemGen,
    Word,
    chevalley_commutator,
    elem_matrix,
    minimal_subring_generators,
    rewrite_over_finite_genset,
    word_eval,
    word_inverse,
)
from .symplectic import SpGen, is_symplectic, sp_elem_matrix, sp_relations_fuzz
from .factorization import (
    FactorizationWitness,
    MennickeFactor,
    RankOneData,
    Verdict,
    conj_decompose,
    factor_mennicke,
    mennicke_coeffs,
    rank_one_data,
    verify_witness,
)
from .cocycle import CocycleValue, cocycle_defect, derivation_cocycle, reduce_at_zero
from .grammar import parse_sp_word, parse_word
