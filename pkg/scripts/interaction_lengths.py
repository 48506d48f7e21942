"""Histogram of the minimal interaction length n* over random symmetric states."""
import argparse
from collections import Counter

import numpy as np

from symclass.corpus import haar_symmetric, planted_state
from symclass.hamiltonian import rank_profile


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-min", type=int, default=4)
    ap.add_argument("--n-max", type=int, default=12)
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    print(f"{'N':>3} {'bound':>5}  haar n* histogram | planted D -> n*")
    for n in range(args.n_min, args.n_max + 1):
        haar = Counter(rank_profile(haar_symmetric(rng, n)).n_star for _ in range(args.count))
        planted = {d: rank_profile(planted_state(rng, n, d)).n_star for d in range(1, n + 2)}
        print(f"{n:>3} {n // 2 + 1:>5}  {dict(sorted(haar.items()))} | {planted}")


if __name__ == "__main__":
    main()
