"""Print the PN/Gold tables next to the published values.

    python scripts/reproduce_tables.py [--workers 4]
"""

import argparse

from spreadcodes.report import build_tables


def fmt_db(x):
    return "impulsive" if x is None else f"{x:7.2f}"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    bundle = build_tables(range(3, 11), workers=args.workers)

    print("length  m-sequences  published")
    for r in bundle.table1:
        print(f"{r['length']:6d}  {r['family_size']:11d}  {r['published_family_size']:9d}")

    for title, rows in (("PN codes", bundle.table2), ("Gold codes", bundle.table3)):
        print(f"\n{title}")
        print(f"{'N':>4} {'M':>4}  {'side dB':>9} {'ccf dB':>7} {'%-1':>6} {'pub %-1':>7}  ok  ccf values")
        for r in rows:
            c, p = r["computed"], r["published"]
            ok = "yes" if all(r["match"].values()) else "NO"
            print(f"{r['length']:4d} {c['family_size']:4d}  {fmt_db(c['peak_sidelobe_acf_db']):>9} "
                  f"{c['peak_ccf_db']:7.2f} {c['pct_minus_one']:6.2f} {p['pct_minus_one']:7.1f}  {ok:3s} "
                  f"{c['ccf_values']}")

    print("\npartners:")
    for info in bundle.metadata["pairs"]:
        extra = len(info["matching_candidates"]) - 1
        print(f"  {info['generator']:>22} + {info['partner']:<22} ({info['method']}, "
              f"{extra} other candidate(s), preferred={info['preferred']})")
    bad = bundle.mismatches()
    print(f"\n{len(bad)} mismatching cells")


if __name__ == "__main__":
    main()
