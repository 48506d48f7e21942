"""Fraction of D-invariance failures under random ILOs, per condition cap and seed.

Large caps amplify some decomposition terms by up to cond^N relative to others,
so at some point the smallest term drops below the residual threshold and the
solver legitimately certifies a smaller D in floating point.
"""
import argparse
import time

from symclass.suites import slocc_suite


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--caps", type=float, nargs="+", default=[5.0, 20.0, 50.0, 200.0])
    ap.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2, 7])
    ap.add_argument("--count", type=int, default=100)
    args = ap.parse_args()

    print(f"{'cap':>7} {'seed':>5} {'failed ILOs':>12} {'checks':>7} {'time_s':>7}")
    for cap in args.caps:
        for seed in args.seeds:
            t0 = time.perf_counter()
            r = slocc_suite(seed=seed, count=args.count, condition_cap=cap)
            bad = sum(len(f["mismatches"]) for f in r.failures if f.get("ilo_index") is not None)
            print(f"{cap:>7.0f} {seed:>5d} {r.cases - r.passed:>5d}/{r.cases:<6d} {r.stats['checks']:>7d} {time.perf_counter() - t0:>7.1f}"
                  + (f"  ({bad} state mismatches)" if bad else ""))


if __name__ == "__main__":
    main()
