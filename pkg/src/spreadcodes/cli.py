"""Command-line interface: ``spreadcodes <command> ...``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from ._io import atomic_write, default_output
from .codefamily import build_gold_family, build_pn_family, find_preferred_pairs
from .correlation import aperiodic_profile, periodic_acf, periodic_ccf
from .envelope import EnvelopeConfig, envelope_power, papr_sweep
from .gf2poly import enumerate_primitive, format_polynomial, parse_polynomial
from .report import TABLE23_DEGREES, build_tables, decided_pair


def _degrees(values) -> list[int]:
    out = []
    for v in values:
        for part in str(v).split(","):
            if "-" in part:
                lo, hi = part.split("-", 1)
                out.extend(range(int(lo), int(hi) + 1))
            elif part:
                out.append(int(part))
    return out


def _emit(text: str, out, default_name: str):
    path = out or default_output(default_name)
    if path is None:
        sys.stdout.write(text)
    else:
        atomic_write(path, text)
        print(f"wrote {path}", file=sys.stderr)


def resolve_family(kind: str, degree: int, pair: str | None = None):
    """Build the family a command refers to."""
    if kind == "pn":
        if pair:
            raise SystemExit("--pair only applies to --family gold")
        return build_pn_family(degree)
    if kind != "gold":
        raise SystemExit(f"unknown family {kind!r}")
    if pair:
        parts = pair.split(",")
        if len(parts) != 2:
            raise SystemExit(f"--pair expects two comma-separated polynomials, got {pair!r}")
        p1, p2 = (parse_polynomial(p) for p in parts)
        if p1.degree != degree:
            raise SystemExit(f"--pair has degree {p1.degree} but --degree is {degree}")
        return build_gold_family(p1, p2)
    if degree in TABLE23_DEGREES:
        base, partner, _ = decided_pair(degree)
        return build_gold_family(base, partner)
    pairs = find_preferred_pairs(degree)
    if not pairs:
        raise SystemExit(f"no preferred pair at degree {degree}; pass --pair")
    return build_gold_family(*pairs[0])


def _member(family, i: int):
    if not 0 <= i < len(family):
        raise SystemExit(f"member index {i} out of range 0..{len(family) - 1}")
    return family[i]


def cmd_tables(args) -> int:
    bundle = build_tables(_degrees(args.degree or ["3-10"]), workers=args.workers)
    if args.format == "json":
        _emit(bundle.to_json(), args.out, "tables.json")
    else:
        files = bundle.csv_tables()
        target = args.out or default_output("tables")
        if target is None:
            sys.stdout.write("\n".join(f"# {name}\n{text}" for name, text in files.items()))
        else:
            for name, text in files.items():
                atomic_write(f"{target}/{name}", text)
            print(f"wrote {target}/", file=sys.stderr)
    for line in bundle.mismatches(include_advisory=True):
        print(f"MISMATCH {line}", file=sys.stderr)
    failures = bundle.mismatches()
    if failures:
        print(f"{len(failures)} published value(s) not reproduced", file=sys.stderr)
        return 1
    return 0


def cmd_profile(args) -> int:
    family = resolve_family(args.family, args.degree, args.pair)
    if args.all_members:
        if args.mode != "acf":
            raise SystemExit("--all-members only applies to --mode acf")
        series = [(k, _member(family, k)) for k in range(len(family))]
    else:
        series = None
    members = [int(m) for m in (args.member or [0])]

    def one(k, s1, s2=None):
        if args.aperiodic:
            return aperiodic_profile(s1, s2)
        return periodic_acf(s1) if s2 is None else periodic_ccf(s1, s2)

    if series is not None:
        profiles = [(k, one(k, s)) for k, s in series]
    elif args.mode == "acf":
        profiles = [(members[0], one(members[0], _member(family, members[0])))]
    else:
        if len(members) != 2:
            raise SystemExit("--mode ccf needs two --member indices")
        profiles = [(members[0], one(None, _member(family, members[0]), _member(family, members[1])))]

    if args.format == "json":
        payload = {"family": family.manifest(), "profiles": [dict(member=k, **p.to_dict()) for k, p in profiles]}
        payload["family"].pop("members")
        text = json.dumps(payload) + "\n"
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if len(profiles) == 1:
            w.writerow(["shift", "value"])
            w.writerows(profiles[0][1].to_rows())
        else:
            w.writerow(["member", "shift", "value"])
            for k, p in profiles:
                w.writerows((k, s, v) for s, v in p.to_rows())
        text = buf.getvalue()
    _emit(text, args.out, f"profile.{args.format}")
    return 0


def cmd_papr(args) -> int:
    family = resolve_family(args.family, args.degree, args.pair)
    summary = papr_sweep(
        family, args.L, bits=args.bits, subsets=args.subsets, subcarrier_separation=args.F,
        oversampling=args.oversampling, samples=args.samples, seed=args.seed,
        inphase_cross=not args.literal,
    )
    if args.format == "json":
        text = json.dumps(summary.to_dict(), indent=2, sort_keys=True) + "\n"
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["members", "bits", "papr_linear", "papr_db", "peak_power", "mean_power"])
        for c in summary.configs:
            w.writerow([";".join(map(str, c["members"])), ";".join(map(str, c["bits"])),
                        repr(c["papr_linear"]), repr(c["papr_db"]), repr(c["peak_power"]), repr(c["mean_power"])])
        text = buf.getvalue()
    _emit(text, args.out, f"papr.{args.format}")
    if args.series:
        worst = summary.worst_config
        cfg = EnvelopeConfig(tuple(family[i] for i in worst["members"]), tuple(worst["bits"]),
                             args.F, args.oversampling, not args.literal)
        atomic_write(args.series, envelope_power(cfg).to_csv())
    return 0


def cmd_enumerate(args) -> int:
    rows = []
    for n in _degrees(args.degree):
        for p in enumerate_primitive(n):
            rows.append((n, (1 << n) - 1, format_polynomial(p)))
    if args.format == "json":
        by_degree = {}
        for n, _, p in rows:
            by_degree.setdefault(str(n), []).append(p)
        text = json.dumps({"count": {k: len(v) for k, v in by_degree.items()}, "polynomials": by_degree}) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["degree", "length", "polynomial"])
        w.writerows(rows)
        text = buf.getvalue()
    else:
        text = "".join(f"{p}\n" for _, _, p in rows)
    _emit(text, args.out, f"polynomials.{args.format}")
    return 0


def cmd_gen(args) -> int:
    family = resolve_family(args.family, args.degree, args.pair)
    codes = list(family.codes) if args.member is None else [_member(family, args.member)]
    if args.format == "json":
        text = json.dumps({"family": family.manifest(), "codes": [c.to_dict() for c in codes]}) + "\n"
    elif len(codes) == 1:
        text = codes[0].to_csv()
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index"] + [c.label for c in codes])
        for i in range(family.length):
            w.writerow([i] + [int(c.chips[i]) for c in codes])
        text = buf.getvalue()
    _emit(text, args.out, f"codes.{args.format}")
    return 0


def _family_args(p):
    p.add_argument("--family", choices=["pn", "gold"], default="pn")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--pair", help="generating pair for gold, e.g. x^7+x+1,x^7+x^3+1")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spreadcodes", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tables", help="reproduce the PN/Gold tables with match flags")
    p.add_argument("--degree", action="append", help="degrees, e.g. 3-10 or 3,5,7 (repeatable)")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out", help="output file (json) or directory (csv)")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("profile", help="emit a correlation profile as (shift, value) rows")
    _family_args(p)
    p.add_argument("--mode", choices=["acf", "ccf"], default="acf")
    p.add_argument("--member", action="append", type=int, help="member index (twice for ccf)")
    p.add_argument("--all-members", action="store_true", help="one ACF series per member")
    p.add_argument("--aperiodic", action="store_true")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("papr", help="envelope PAPR sweep over codes and data bits")
    _family_args(p)
    p.add_argument("--L", type=int, default=2, help="simultaneous codes")
    p.add_argument("--F", type=float, default=1.0, help="subcarrier separation")
    p.add_argument("--bits", choices=["auto", "exhaustive", "random"], default="auto")
    p.add_argument("--subsets", choices=["first", "all", "random"], default="first")
    p.add_argument("--samples", type=int, default=256, help="draws for random policies")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--oversampling", type=int, default=None, help="samples per symbol (>= 4N)")
    p.add_argument("--literal", action="store_true", help="omit the zero-lag cross term")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out")
    p.add_argument("--series", help="write the worst configuration's (t, power) CSV here")
    p.set_defaults(func=cmd_papr)

    p = sub.add_parser("enumerate-polys", help="list primitive polynomials")
    p.add_argument("--degree", action="append", required=True)
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("gen", help="dump a family's chips")
    _family_args(p)
    p.add_argument("--member", type=int)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
