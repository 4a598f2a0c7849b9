import csv
import io
import json

import pytest

from spreadcodes import published
from spreadcodes.cli import main
from spreadcodes.report import ReportBundle, build_tables


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_tables_json(tmp_path, capsys):
    path = tmp_path / "t.json"
    code, _, _ = run(capsys, "tables", "--degree", "3-10", "--out", str(path))
    assert code == 0
    bundle = ReportBundle.from_json(path.read_text())
    assert [r["family_size"] for r in bundle.table1] == [2, 2, 6, 6, 18, 16, 48, 60]
    row127 = next(r for r in bundle.table2 if r["length"] == 127)
    assert row127["computed"]["acf_values"] == [-1, 127]
    assert row127["computed"]["ccf_values"] == [-17, -1, 15]
    assert round(row127["computed"]["peak_ccf_db"], 2) == -18.55
    row7 = next(r for r in bundle.table3 if r["length"] == 7)
    assert row7["computed"]["family_size"] == 9
    assert row7["computed"]["acf_values"] == [-5, -1, 3, 7]
    assert row7["computed"]["ccf_values"] == [-5, -1, 3]
    assert all(row["polynomials"] for row in bundle.table2 + bundle.table3)


def test_bundle_round_trip():
    bundle = build_tables([3, 4])
    text = bundle.to_json()
    assert ReportBundle.from_json(text).to_json() == text
    assert ReportBundle.from_json(text).to_dict() == json.loads(text)


def test_tables_csv_dir(tmp_path, capsys):
    code, _, _ = run(capsys, "tables", "--degree", "3,4", "--format", "csv", "--out", str(tmp_path / "csv"))
    assert code == 0
    rows = list(csv.DictReader(open(tmp_path / "csv" / "table3.csv")))
    assert rows[0]["length"] == "7" and rows[0]["pct_minus_one"] == "53.0"
    assert rows[1]["preferred"] == "False"
    t2 = list(csv.DictReader(open(tmp_path / "csv" / "table2.csv")))
    assert t2[0]["peak_sidelobe_acf_db"] == "impulsive"
    assert t2[0]["ccf_values"] == "-5;-1;3"
    assert open(tmp_path / "csv" / "table1.csv", newline="").read().count("\r") == 0


def test_tables_mismatch_sets_exit_status(monkeypatch, capsys):
    monkeypatch.setitem(published.TABLE3, 7, dict(published.TABLE3[7], peak_ccf_db=-9.0))
    code, _, err = run(capsys, "tables", "--degree", "3")
    assert code == 1
    assert "table3 N=7: peak_ccf_db" in err


def test_tables_pn_percent_is_advisory(monkeypatch, capsys):
    monkeypatch.setitem(published.TABLE2, 7, dict(published.TABLE2[7], pct_minus_one=10.0))
    code, _, err = run(capsys, "tables", "--degree", "3")
    assert code == 0
    assert "MISMATCH table2 N=7: pct_minus_one" in err


def test_tables_bad_degree(capsys):
    code, _, err = run(capsys, "tables", "--degree", "11")
    assert code == 2 and "unsupported" in err


def test_profile_pn_acf(capsys):
    code, out, _ = run(capsys, "profile", "--family", "pn", "--degree", "3", "--member", "0", "--mode", "acf")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["shift", "value"]
    assert [int(v) for _, v in rows[1:]] == [7, -1, -1, -1, -1, -1, -1]


def test_profile_gold_sidelobe(capsys):
    _, out, _ = run(capsys, "profile", "--family", "gold", "--degree", "3", "--member", "2")
    vals = [int(r[1]) for r in list(csv.reader(io.StringIO(out)))[1:]]
    assert any(v != -1 for v in vals[1:])


def test_profile_self_ccf_equals_acf(capsys):
    _, acf, _ = run(capsys, "profile", "--family", "gold", "--degree", "4", "--member", "5")
    _, ccf, _ = run(capsys, "profile", "--family", "gold", "--degree", "4", "--mode", "ccf",
                    "--member", "5", "--member", "5")
    assert acf == ccf


def test_profile_all_members_and_json(capsys):
    _, out, _ = run(capsys, "profile", "--family", "gold", "--degree", "3", "--all-members")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["member", "shift", "value"] and len(rows) == 1 + 9 * 7
    _, out, _ = run(capsys, "profile", "--family", "pn", "--degree", "3", "--aperiodic", "--format", "json")
    prof = json.loads(out)["profiles"][0]
    assert prof["mode"] == "aperiodic" and prof["shifts"][0] == -6


def test_profile_bad_index(capsys):
    with pytest.raises(SystemExit, match="out of range"):
        main(["profile", "--family", "pn", "--degree", "3", "--member", "5"])


def test_papr_command(tmp_path, capsys):
    path = tmp_path / "p.json"
    series = tmp_path / "s.csv"
    code, _, _ = run(capsys, "papr", "--family", "gold", "--degree", "3", "--L", "2", "--bits", "exhaustive",
                     "--out", str(path), "--series", str(series))
    assert code == 0
    d = json.loads(path.read_text())
    assert d["n_configs"] == 4 and d["family"]["kind"] == "gold"
    assert d["family"]["polynomials"] == ["x^3+x^2+1", "x^3+x+1"]
    assert series.read_text().startswith("t,power\n")
    first = path.read_bytes()
    run(capsys, "papr", "--family", "gold", "--degree", "3", "--L", "2", "--bits", "exhaustive", "--out", str(path))
    assert path.read_bytes() == first


def test_papr_single_sequence(capsys):
    _, out, _ = run(capsys, "papr", "--family", "pn", "--degree", "5", "--L", "1", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 2 and all(float(r["papr_linear"]) >= 1 for r in rows)


def test_papr_too_many_codes(capsys):
    code, _, err = run(capsys, "papr", "--family", "pn", "--degree", "3", "--L", "3")
    assert code == 2 and "family size" in err


def test_enumerate_polys(capsys):
    _, out, _ = run(capsys, "enumerate-polys", "--degree", "3")
    assert out.split() == ["x^3+x+1", "x^3+x^2+1"]
    _, out, _ = run(capsys, "enumerate-polys", "--degree", "3-10", "--format", "json")
    assert list(json.loads(out)["count"].values()) == [2, 2, 6, 6, 18, 16, 48, 60]


def test_gen_json(capsys):
    _, out, _ = run(capsys, "gen", "--family", "gold", "--degree", "3", "--pair", "x^3+x^2+1,x^3+x+1")
    d = json.loads(out)
    assert d["family"]["size"] == 9
    assert set(d["codes"][0]) == {"label", "length", "chips"}
    assert all(c in (1, -1) for c in d["codes"][4]["chips"])


def test_gen_member_csv(capsys):
    _, out, _ = run(capsys, "gen", "--family", "pn", "--degree", "3", "--member", "1", "--format", "csv")
    assert out.splitlines()[0] == "index,chip" and len(out.splitlines()) == 8


def test_gen_bad_pair(capsys):
    with pytest.raises(SystemExit):
        main(["gen", "--family", "gold", "--degree", "4", "--pair", "x^3+x^2+1,x^3+x+1"])
    code, _, err = run(capsys, "gen", "--family", "gold", "--degree", "3", "--pair", "x^3+x^3+1,x^3+x+1")
    assert code == 2 and "duplicate" in err


def test_env_default_output_dir(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("SPREADCODES_OUTDIR", str(tmp_path))
    code, out, _ = run(capsys, "enumerate-polys", "--degree", "4")
    assert code == 0 and out == ""
    assert (tmp_path / "polynomials.text").read_text() == "x^4+x+1\nx^4+x^3+1\n"


def test_gold_default_pair_beyond_tables(capsys):
    _, out, _ = run(capsys, "gen", "--family", "gold", "--degree", "9", "--member", "0", "--format", "json")
    d = json.loads(out)
    assert d["family"]["preferred"] is True and d["family"]["size"] == 513
