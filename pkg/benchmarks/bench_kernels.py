"""Compare the compiled kernels against the pure-Python fallback.

Each backend runs in its own interpreter, since the choice is made at import:

    python3 benchmarks/bench_kernels.py
"""

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, random, sys, time
from chevbg import kernels
from chevbg.ring import CoeffSpec, PolyRing
from chevbg.sampling import random_elem_gen, random_poly, random_word
from chevbg.factorization import conj_decompose

reps = int(sys.argv[1])
ring = PolyRing(CoeffSpec(), 2)
rng = random.Random(7)
pairs = [(random_poly(rng, ring, max_terms=12, max_deg=6, allow_zero=False).terms,
          random_poly(rng, ring, max_terms=12, max_deg=6, allow_zero=False).terms)
         for _ in range(200)]
t0 = time.perf_counter()
for _ in range(reps):
    for a, b in pairs:
        kernels.poly_mul(a, b, 0)
mul = time.perf_counter() - t0

zx = PolyRing(CoeffSpec(), 1)
rng = random.Random(11)
cases = [(random_word(rng, 3, zx, max_len=8, max_deg=2), random_elem_gen(rng, 3, zx, max_deg=2))
         for _ in range(100)]
t0 = time.perf_counter()
for gamma, s in cases:
    conj_decompose(gamma, s.i, s.j, s.a)
conj = time.perf_counter() - t0
print(json.dumps({"backend": kernels.BACKEND, "poly_mul": mul, "conj_decompose": conj}))
"""


def run(pure: bool, reps: int) -> dict:
    env = dict(os.environ, CHEVBG_PURE_PYTHON="1" if pure else "0")
    out = subprocess.run([sys.executable, "-c", WORKER, str(reps)], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--reps", type=int, default=20, help="passes over the 200 multiplication pairs")
    args = ap.parse_args()
    fast, slow = run(False, args.reps), run(True, args.reps)
    if fast["backend"] != "cython":
        print("compiled extension not available; both runs used the Python kernels")
    print(f"{'task':<16}{fast['backend']:>12}{slow['backend']:>12}{'speedup':>10}")
    for key in ("poly_mul", "conj_decompose"):
        print(f"{key:<16}{fast[key]:>11.3f}s{slow[key]:>11.3f}s{slow[key] / fast[key]:>9.1f}x")


if __name__ == "__main__":
    main()
