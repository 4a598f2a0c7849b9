"""Dump correlation series for plotting (PN ACFs, Gold length-7 ACFs, PN vs Gold at 255).

    python scripts/figure_profiles.py outdir/
"""

import sys
from pathlib import Path

from spreadcodes import build_gold_family, generate_pn, periodic_acf, periodic_ccf
from spreadcodes._io import atomic_write
from spreadcodes.report import decided_pair


def two_sided(prof):
    """Re-index a cyclic profile onto lags -(N-1)..N-1, peak in the centre."""
    N = len(prof)
    return [(lag, int(prof.values[lag % N])) for lag in range(-(N - 1), N)]


def write(path, rows, header=("lag", "value")):
    atomic_write(path, ",".join(header) + "\n" + "".join(",".join(map(str, r)) + "\n" for r in rows))


def main(out):
    out = Path(out)
    for text in ("x^3+x^2+1", "x^6+x+1", "x^7+x+1", "x^8+x^6+x^5+x^3+1"):
        write(out / f"pn_acf_{text.replace('^', '').replace('+', '_')}.csv", two_sided(periodic_acf(generate_pn(text))))

    gold7 = build_gold_family(*decided_pair(3)[:2])
    rows = [(k, lag, v) for k, code in enumerate(gold7.codes) for lag, v in two_sided(periodic_acf(code))]
    write(out / "gold7_acf_all.csv", rows, ("member", "lag", "value"))

    base, partner, _ = decided_pair(8)
    a, b = generate_pn(base), generate_pn(partner)
    gold = build_gold_family(base, partner)
    write(out / "pn255_acf.csv", two_sided(periodic_acf(a)))
    write(out / "gold255_acf.csv", two_sided(periodic_acf(gold[2])))
    write(out / "pn255_ccf.csv", two_sided(periodic_ccf(a, b)))
    write(out / "gold255_ccf.csv", two_sided(periodic_ccf(gold[2], gold[3])))
    print(f"wrote series to {out}/")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "figures")
