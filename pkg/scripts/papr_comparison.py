"""Worst-case and mean PAPR of PN vs Gold code sets at several lengths.

    python scripts/papr_comparison.py [--L 2] [--subsets 64]
"""

import argparse

from spreadcodes import build_gold_family, build_pn_family, papr_sweep
from spreadcodes.report import decided_pair


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--L", type=int, default=2)
    ap.add_argument("--subsets", type=int, default=64, help="random code subsets per family")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    print(f"{'N':>4} {'family':>6} {'configs':>8} {'worst dB':>9} {'mean lin':>9}")
    for n in range(3, 9):
        gold = build_gold_family(*decided_pair(n)[:2])
        for fam in (build_pn_family(n), gold):
            if args.L > len(fam):
                continue
            s = papr_sweep(fam, args.L, subsets="random", samples=args.subsets, seed=args.seed)
            print(f"{fam.length:4d} {fam.kind:>6} {s.n_configs:8d} {s.worst_papr_db:9.3f} {s.mean_papr_linear:9.3f}")


if __name__ == "__main__":
    main()
