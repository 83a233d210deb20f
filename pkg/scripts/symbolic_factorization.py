"""Factor adj(X) for the generic even-size matrix and report how large the
factors get: terms and degree of the entries of Y, Z, Y', Z' and of C.

    python scripts/symbolic_factorization.py --n 4 --pairs 3 --out cert4.json
"""

import argparse
import json
import random
import time

from adjfactor.factor import factor_adjoint
from adjfactor.matrix import generic_matrix, hyperbolic
from adjfactor.ring import ZZ
from adjfactor.sampling import random_matrix


def entry_stats(M):
    polys = [v for row in M.rows for v in row]
    return max(len(p) for p in polys), max(p.degree() for p in polys)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, default=4)
    parser.add_argument("--pairs", type=int, default=3, help="random det-1 alternating pairs besides the hyperbolic one")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", help="write the hyperbolic certificate as JSON")
    args = parser.parse_args()

    X = generic_matrix(args.n)
    rng = random.Random(args.seed)
    H = hyperbolic(args.n // 2)
    pairs = [("hyperbolic", H, H)]
    for i in range(args.pairs):
        pairs.append((f"random-{i}", random_matrix(ZZ, args.n, rng, "alternating_det1"),
                      random_matrix(ZZ, args.n, rng, "alternating_det1")))

    print(f"{'pair':<12} {'ok':>4} {'r':>10} {'C terms/deg':>12} {'Z terms/deg':>12} {'secs':>6}")
    for name, A, Ap in pairs:
        start = time.perf_counter()
        cert = factor_adjoint(X, A, Ap, seed=args.seed)
        c_terms, c_deg = entry_stats(cert.C)
        z_terms, z_deg = entry_stats(cert.Z)
        print(f"{name:<12} {str(cert.all_passed):>4} {str(cert.r)[:10]:>10} "
              f"{c_terms:>6}/{c_deg:<5} {z_terms:>6}/{z_deg:<5} {time.perf_counter() - start:6.2f}")
        if args.out and name == "hyperbolic":
            with open(args.out, "w") as f:
                json.dump(cert.to_dict(), f, indent=2)


if __name__ == "__main__":
    main()
