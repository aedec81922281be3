"""Command line entry point.

Every subcommand writes one JSON document (``"schema": 1``) to stdout or
``--out``.  Exit status: 0 success/verified, 1 verification failure,
2 bad input.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import __version__
from .chevalley import commutator_relations_fuzz, minimal_subring_generators, word_eval
from .cocycle import (
    CocycleValue,
    cocycle_defect,
    derivation_cocycle,
    in_kernel,
    int_matrix,
    reduce_at_zero,
)
from .errors import ChevError, ParseError
from .factorization import (
    SCHEMA_VERSION,
    Verdict,
    conj_decompose,
    verify_witness,
    witness_from_dict,
    witness_to_json,
)
from .grammar import max_index, parse_sp_word, parse_word, word_kind
from .matrix import mat_det
from .ring import CoeffSpec, PolyRing, parse_poly
from .symplectic import sp_relations_fuzz, sp_word_eval

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _uint64(text: str) -> int:
    v = int(text, 0)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=None,
                        help="matrix dimension (half-dimension for symplectic words)")
    common.add_argument("--vars", type=int, default=None,
                        help="number of ring variables x1..xk (default: inferred)")
    common.add_argument("--mod", type=int, default=None,
                        help="coefficient modulus m >= 2 (default: integers)")
    common.add_argument("--seed", type=_uint64, default=0)
    common.add_argument("--trials", type=_positive, default=100)
    common.add_argument("--out", default=None, help="output path (default: stdout)")

    parser = argparse.ArgumentParser(prog="chevbg", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate a word to a matrix")
    p.add_argument("word")
    p = sub.add_parser("conjugate-factor", parents=[common],
                       help="factor GAMMA e_ij(POLY) GAMMA^-1 and emit a witness")
    p.add_argument("gamma")
    p.add_argument("i", type=int)
    p.add_argument("j", type=int)
    p.add_argument("poly")
    p = sub.add_parser("verify", parents=[common], help="re-check a witness file")
    p.add_argument("witness_file")
    sub.add_parser("relations-fuzz", parents=[common],
                   help="random type A and type C relation checks")
    p = sub.add_parser("cocycle", parents=[common],
                       help="reduction at x=0, derivation cocycle, kernel membership")
    p.add_argument("word")
    p = sub.add_parser("subring", parents=[common], help="generators of the parameter subring")
    p.add_argument("word")
    p = sub.add_parser("defect", parents=[common],
                       help="cocycle defect of the derivation cocycle on sample pairs")
    p.add_argument("samples_file")
    return parser


def _ring(args, *texts) -> PolyRing:
    coeffs = CoeffSpec(args.mod) if args.mod is not None else CoeffSpec()
    k = args.vars
    if k is None:
        k = max([1] + [int(x) for t in texts for x in re.findall(r"x(\d+)", t)])
    return PolyRing(coeffs, k)


def _dim(args, *texts, extra=(), minimum=3) -> int:
    if args.n is not None:
        return args.n
    return max([minimum, *extra] + [max_index(t) for t in texts])


def _ring_doc(ring: PolyRing) -> dict:
    return {"k": ring.nvars, "coeff": str(ring.coeffs)}


def _report(command: str, **fields) -> dict:
    return {"schema": SCHEMA_VERSION, "command": command, **fields}


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_json(path: str):
    text = _read(path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc.msg} (line {exc.lineno}, "
                         f"column {exc.colno})") from None


def cmd_eval(args):
    kind = word_kind(args.word)
    ring = _ring(args, args.word)
    if kind == "C":
        n = _dim(args, args.word, minimum=2)
        m = sp_word_eval(parse_sp_word(args.word, n, ring), n, ring)
    else:
        n = _dim(args, args.word)
        m = word_eval(parse_word(args.word, n, ring))
    return EXIT_OK, _report("eval", type=kind if kind != "empty" else "A", dimension=m.n,
                            ring=_ring_doc(ring), matrix=m.to_strings(), det=str(mat_det(m)))


def cmd_conjugate_factor(args):
    ring = _ring(args, args.gamma, args.poly)
    n = _dim(args, args.gamma, extra=(args.i, args.j))
    gamma = parse_word(args.gamma, n, ring)
    a = parse_poly(args.poly, ring.nvars, ring.coeffs)
    wit = conj_decompose(gamma, args.i, args.j, a)
    status = EXIT_OK if wit.verified == Verdict.YES else EXIT_FAIL
    return status, witness_to_json(wit)


def cmd_verify(args):
    doc = _load_json(args.witness_file)
    if not isinstance(doc, dict):
        raise InputError("witness file must hold a JSON object")
    wit = witness_from_dict(doc)
    verdict = verify_witness(wit)
    status = EXIT_OK if verdict == Verdict.YES else EXIT_FAIL
    return status, _report("verify", file=str(args.witness_file), verified=verdict.value,
                           length=len(wit.word), claimed_bound=wit.claimed_bound,
                           recorded=wit.verified.value)


def cmd_relations_fuzz(args):
    coeffs = CoeffSpec(args.mod) if args.mod is not None else CoeffSpec()
    ring = PolyRing(coeffs, args.vars or 1)
    a = commutator_relations_fuzz(args.seed, args.trials, ring=ring)
    c = sp_relations_fuzz(args.seed, args.trials, ring=ring)
    status = EXIT_OK if a.ok and c.ok else EXIT_FAIL
    return status, _report("relations-fuzz", seed=args.seed, trials=args.trials,
                           ring=_ring_doc(ring), type_a=a.as_dict(), type_c=c.as_dict())


def cmd_cocycle(args):
    ring = _ring(args, args.word)
    n = _dim(args, args.word)
    g = word_eval(parse_word(args.word, n, ring))
    pi = int_matrix(reduce_at_zero(g))
    c = derivation_cocycle(g)
    return EXIT_OK, _report("cocycle", dimension=n, reduction=pi.tolist(), cocycle=c.tolist(),
                            in_kernel=in_kernel(g))


def cmd_subring(args):
    ring = _ring(args, args.word)
    n = _dim(args, args.word, minimum=2)
    gens = minimal_subring_generators(parse_word(args.word, n, ring))
    return EXIT_OK, _report("subring", ring=_ring_doc(ring), generators=[str(p) for p in gens])


def cmd_defect(args):
    doc = _load_json(args.samples_file)
    if not isinstance(doc, dict) or not isinstance(doc.get("pairs"), list):
        raise InputError('samples file must be an object with a "pairs" list')
    pairs = doc["pairs"]
    if any(not (isinstance(p, list) and len(p) == 2) for p in pairs):
        raise InputError("each sample must be a pair of words")
    texts = [t for p in pairs for t in p]
    ring = _ring(args, *texts)
    n = _dim(args, *texts)
    shift = doc.get("shift")
    if shift is not None:
        shift = CocycleValue(tuple(tuple(r) for r in shift))
        if shift.n != n:
            raise InputError(f"shift is {shift.n}x{shift.n}, dimension is {n}")
        cmap = lambda g: derivation_cocycle(g) + shift  # noqa: E731
    else:
        cmap = derivation_cocycle
    samples = [(word_eval(parse_word(g, n, ring)), word_eval(parse_word(h, n, ring)))
               for g, h in pairs]
    return EXIT_OK, _report("defect", dimension=n, samples=len(samples),
                            shifted=shift is not None, defect=cocycle_defect(cmap, samples))


COMMANDS = {
    "eval": cmd_eval,
    "conjugate-factor": cmd_conjugate_factor,
    "verify": cmd_verify,
    "relations-fuzz": cmd_relations_fuzz,
    "cocycle": cmd_cocycle,
    "subring": cmd_subring,
    "defect": cmd_defect,
}


def execute(args):
    """Run parsed ``args``; returns ``(exit_status, output_text)``."""
    if args.mod is not None and args.mod < 2:
        return EXIT_INPUT, "error: --mod must be >= 2\n"
    try:
        status, report = COMMANDS[args.command](args)
    except ParseError as exc:
        return EXIT_INPUT, f"parse error: {exc}\n"
    except (InputError, ChevError, ValueError, IndexError) as exc:
        return EXIT_INPUT, f"error: {exc}\n"
    text = report if isinstance(report, str) else json.dumps(report, indent=2) + "\n"
    return status, text


def run_command(argv=None):
    return execute(build_parser().parse_args(argv))


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    status, text = execute(args)
    if status == EXIT_INPUT:
        sys.stderr.write(text)
    elif args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
