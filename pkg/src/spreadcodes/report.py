"""Reproduction of the PN/Gold comparison tables with per-cell checks."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from . import __version__, published
from .codefamily import build_gold_family, build_pn_family, is_preferred_pair, select_partner
from .correlation import family_report, round_half_up
from .gf2poly import enumerate_primitive, format_polynomial, parse_polynomial

TABLE1_DEGREES = range(3, 11)
TABLE23_DEGREES = range(3, 9)

# cells whose mismatch never affects the exit status
ADVISORY_CELLS = {"table2": {"pct_minus_one"}, "table3": set()}

CONVENTIONS = {
    "bipolar_mapping": "binary 0 -> +1, binary 1 -> -1",
    "lfsr": "Fibonacci; x^k (1<=k<n) sets C_k, constant term sets C_n; all-ones seed; seed emitted first",
    "gold_ordering": "[a, a', a+D^0 a', ..., a+D^(N-1) a'], D^k = advance by k chips",
    "db_metric": "20*log10(largest positive correlation at the relevant shifts / N)",
    "pct_minus_one": "share of -1 among pairwise cyclic CCF values over lags -(N-1)..N-1",
    "table2_ccf_scope": "CCF columns use the generator/partner pair; ACF and family size use all m-sequences",
}


def decided_pair(degree: int):
    """Generator polynomial and its partner for a table row, with provenance."""
    text, published_preferred = published.GENERATORS[degree]
    base = parse_polynomial(text)
    target = published.TABLE2[(1 << degree) - 1]["ccf_values"]
    chosen, candidates = select_partner(base, target)
    if degree in published.NAMED_PARTNERS:
        partner = parse_polynomial(published.NAMED_PARTNERS[degree])
        method = "named"
    else:
        partner = chosen
        method = "search"
    if partner is None:
        raise RuntimeError(f"no partner of {base} reproduces CCF set {target}")
    info = {
        "degree": degree,
        "generator": format_polynomial(base),
        "partner": format_polynomial(partner),
        "method": method,
        "matching_candidates": [format_polynomial(q) for q in candidates],
        "published_preferred": published_preferred,
        "preferred": is_preferred_pair(base, partner),
    }
    return base, partner, info


def _cell_checks(computed: dict, expected: dict) -> dict:
    checks = {}
    for key in ("family_size", "acf_values", "ccf_values"):
        checks[key] = computed[key] == expected[key]
    for key in ("peak_sidelobe_acf_db", "peak_ccf_db"):
        want, got = expected[key], computed[key]
        if want is None:
            checks[key] = got is None and computed["acf_impulsive"]
        else:
            checks[key] = got is not None and abs(got - want) <= published.DB_TOLERANCE
    checks["pct_minus_one"] = abs(computed["pct_minus_one"] - expected["pct_minus_one"]) <= published.PCT_TOLERANCE
    return checks


@dataclass
class ReportBundle:
    table1: list[dict]
    table2: list[dict]
    table3: list[dict]
    metadata: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"table1": self.table1, "table2": self.table2, "table3": self.table3, "metadata": self.metadata}

    @classmethod
    def from_dict(cls, d: dict) -> ReportBundle:
        return cls(d["table1"], d["table2"], d["table3"], d.get("metadata", {}))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> ReportBundle:
        return cls.from_dict(json.loads(text))

    def mismatches(self, include_advisory: bool = False) -> list[str]:
        out = []
        for row in self.table1:
            if not row["match"]:
                out.append(f"table1 N={row['length']}: family_size {row['family_size']} != {row['published_family_size']}")
        for name in ("table2", "table3"):
            for row in getattr(self, name):
                for cell, ok in row["match"].items():
                    if ok or (cell in ADVISORY_CELLS[name] and not include_advisory):
                        continue
                    out.append(
                        f"{name} N={row['length']}: {cell} computed {row['computed'][cell]!r} "
                        f"published {row['published'][cell]!r}"
                    )
        return out

    def csv_tables(self) -> dict[str, str]:
        return {
            "table1.csv": _table1_csv(self.table1),
            "table2.csv": _table23_csv(self.table2),
            "table3.csv": _table23_csv(self.table3),
        }


def _fmt_set(values) -> str:
    return ";".join(str(v) for v in values)


def _fmt_db(x) -> str:
    return "impulsive" if x is None else f"{round_half_up(x, 2):.2f}"


def _fmt_pct(x) -> str:
    return f"{round_half_up(x, 1):.1f}"


def _table1_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["length", "degree", "family_size", "published_family_size", "match"])
    for r in rows:
        pub = "" if r["published_family_size"] is None else r["published_family_size"]
        w.writerow([r["length"], r["degree"], r["family_size"], pub, r["match"]])
    return buf.getvalue()


_COLUMNS = [
    ("family_size", str),
    ("acf_values", _fmt_set),
    ("ccf_values", _fmt_set),
    ("peak_sidelobe_acf_db", _fmt_db),
    ("peak_ccf_db", _fmt_db),
    ("pct_minus_one", _fmt_pct),
]


def _table23_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    header = ["length"]
    for key, _ in _COLUMNS:
        header += [key, f"published_{key}", f"{key}_match"]
    header += ["pct_minus_one_cyclic", "polynomials", "preferred"]
    w.writerow(header)
    for r in rows:
        line = [r["length"]]
        for key, fmt in _COLUMNS:
            line += [fmt(r["computed"][key]), fmt(r["published"][key]), r["match"][key]]
        line += [
            _fmt_pct(r["computed"]["pct_minus_one_cyclic"]),
            _fmt_set(r["polynomials"]),
            r["preferred"],
        ]
        w.writerow(line)
    return buf.getvalue()


def build_tables(degrees=TABLE1_DEGREES, workers: int = 1) -> ReportBundle:
    """Compute all three tables for ``degrees`` (rows 2-3 only for 3..8)."""
    degrees = sorted(set(int(d) for d in degrees))
    bad = [d for d in degrees if d not in TABLE1_DEGREES]
    if bad:
        raise ValueError(f"unsupported degrees {bad}; tables cover {TABLE1_DEGREES.start}..{TABLE1_DEGREES.stop - 1}")
    table1, table2, table3, pairs = [], [], [], []
    for n in degrees:
        N = (1 << n) - 1
        size = len(enumerate_primitive(n))
        pub = published.TABLE1.get(N)
        table1.append({"length": N, "degree": n, "family_size": size,
                       "published_family_size": pub, "match": pub == size})
    for n in (d for d in degrees if d in TABLE23_DEGREES):
        N = (1 << n) - 1
        base, partner, info = decided_pair(n)
        pairs.append(info)
        names = [format_polynomial(base), format_polynomial(partner)]

        pn = build_pn_family(n)
        i, j = pn.polynomials.index(base), pn.polynomials.index(partner)
        rep = family_report(pn, pairs=[(i, j)], workers=workers).to_dict()
        rep["all_pairs_ccf_values"] = family_report(pn, workers=workers).ccf_values
        exp = published.TABLE2[N]
        table2.append({"length": N, "degree": n, "polynomials": names, "preferred": info["preferred"],
                       "computed": rep, "published": exp, "match": _cell_checks(rep, exp)})

        gold = build_gold_family(base, partner)
        rep = family_report(gold, workers=workers).to_dict()
        exp = published.TABLE3[N]
        table3.append({"length": N, "degree": n, "polynomials": names, "preferred": gold.preferred,
                       "computed": rep, "published": exp, "match": _cell_checks(rep, exp)})
    metadata = {
        "tool": "spreadcodes",
        "version": __version__,
        "degrees": degrees,
        "pairs": pairs,
        "conventions": CONVENTIONS,
        "advisory_cells": {k: sorted(v) for k, v in ADVISORY_CELLS.items()},
        "tolerances": {"db": published.DB_TOLERANCE, "pct": published.PCT_TOLERANCE},
    }
    return ReportBundle(table1, table2, table3, metadata)

