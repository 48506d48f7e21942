"""Print D, n*, rank profile and Majorana multiplicities for the named families."""
import argparse

from symclass import build_named, decompose, majorana_roots, rank_profile


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-min", type=int, default=3)
    ap.add_argument("--n-max", type=int, default=12)
    args = ap.parse_args()

    print(f"{'state':<12} {'D':>3} {'n*':>3} {'cond':>9}  ranks / majorana")
    for n in range(args.n_min, args.n_max + 1):
        states = [("ghz", {}), ("w", {})] + ([("x", {})] if n >= 4 else []) + [("dicke", {"k": n // 2})]
        for name, kw in states:
            s = build_named(name, n, **kw)
            dec = decompose(s)
            prof = rank_profile(s)
            label = f"{name}_{n}" + (f"k{kw['k']}" if kw else "")
            maj = majorana_roots(s).configuration
            print(f"{label:<12} {dec.bond_dim:>3} {prof.n_star:>3} {dec.condition:>9.2e}  {list(prof.ranks)} / {list(maj)}")


if __name__ == "__main__":
    main()
