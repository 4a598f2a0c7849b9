import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import aperiodic_corr_bruteforce, cyclic_corr
from spreadcodes import (
    ChipSequence,
    build_gold_family,
    build_pn_family,
    family_report,
    generate_pn,
    parse_polynomial,
    peak_db_wrt_n,
    percent_minus_one,
    periodic_acf,
    periodic_ccf,
)
from spreadcodes.codefamily import CodeFamily
from spreadcodes.correlation import (
    FamilyCorrelationReport,
    aperiodic_corr,
    aperiodic_profile,
    round_half_up,
)
from spreadcodes.gf2poly import enumerate_primitive


@st.composite
def seq_pair(draw, min_size=3, max_size=48):
    n = draw(st.integers(min_size, max_size))
    a = draw(st.lists(st.sampled_from([1, -1]), min_size=n, max_size=n))
    b = draw(st.lists(st.sampled_from([1, -1]), min_size=n, max_size=n))
    return ChipSequence(a, "a"), ChipSequence(b, "b")


def test_acf_of_length_7_m_sequence():
    prof = periodic_acf(generate_pn("x^3+x^2+1"))
    assert prof.values.tolist() == [7, -1, -1, -1, -1, -1, -1]
    assert prof.kind == "auto" and prof.mode == "periodic"


def test_acf_127_two_valued():
    assert periodic_acf(generate_pn("x^7+x^3+1")).value_set() == [-1, 127]


def test_constant_sequence_acf():
    assert periodic_acf(ChipSequence([1] * 9)).values.tolist() == [9] * 9


def test_ccf_examples():
    assert set(periodic_ccf(generate_pn("x^3+x^2+1"), generate_pn("x^3+x+1")).value_set()) <= {-5, -1, 3}
    a, b = generate_pn("x^8+x^6+x^5+x^3+1"), generate_pn("x^8+x^4+x^3+x^2+1")
    assert set(periodic_ccf(a, b).value_set()) <= {-33, -17, -1, 15, 31, 63}


@given(seq_pair())
def test_ccf_matches_bruteforce(pair):
    a, b = pair
    assert periodic_ccf(a, b).values.tolist() == cyclic_corr(a.chips.tolist(), b.chips.tolist())


@given(seq_pair())
def test_fft_path_bit_exact(pair):
    a, b = pair
    assert np.array_equal(periodic_ccf(a, b, method="fft").values, periodic_ccf(a, b).values)


def test_fft_path_bit_exact_long():
    for p in enumerate_primitive(10)[:4]:
        s = generate_pn(p)
        t = generate_pn(enumerate_primitive(10)[-1])
        assert np.array_equal(periodic_ccf(s, t, method="fft").values, periodic_ccf(s, t).values)


@given(seq_pair())
def test_self_ccf_equals_acf(pair):
    a, _ = pair
    assert np.array_equal(periodic_ccf(a, a).values, periodic_acf(a).values)


@given(seq_pair())
def test_ccf_swap_symmetry(pair):
    a, b = pair
    ab, ba = periodic_ccf(a, b).values, periodic_ccf(b, a).values
    N = a.length
    assert all(ab[t] == ba[(N - t) % N] for t in range(N))


@given(seq_pair())
def test_ccf_sum_identity(pair):
    a, b = pair
    assert int(periodic_ccf(a, b).values.sum()) == int(a.chips.sum()) * int(b.chips.sum())


@given(seq_pair(max_size=24), st.data())
def test_aperiodic_matches_bruteforce(pair, data):
    a, b = pair
    n = data.draw(st.integers(-(a.length - 1), a.length - 1))
    assert aperiodic_corr(a, b, n) == aperiodic_corr_bruteforce(a.chips.tolist(), b.chips.tolist(), n)


@given(seq_pair())
def test_periodic_is_sum_of_aperiodic(pair):
    a, b = pair
    N = a.length
    per = periodic_ccf(a, b).values
    for t in range(1, N):
        assert per[t] == aperiodic_corr(a, b, t) + aperiodic_corr(a, b, t - N)


@given(seq_pair())
def test_aperiodic_auto_symmetry(pair):
    a, _ = pair
    prof = aperiodic_profile(a)
    assert np.array_equal(prof.values, prof.values[::-1])
    assert prof.value_at(0) == a.length


def test_aperiodic_edges():
    s = generate_pn("x^3+x^2+1")
    assert aperiodic_corr(s, s, 0) == 7
    assert aperiodic_corr(s, s, 6) == int(s.chips[0]) * int(s.chips[6])
    with pytest.raises(ValueError):
        aperiodic_corr(s, s, 7)


def test_length_mismatch():
    with pytest.raises(ValueError):
        periodic_ccf(ChipSequence([1, 1, 1]), ChipSequence([1, 1, 1, 1]))


@pytest.mark.parametrize(
    "peak, n, db",
    [(3, 7, -7.35), (15, 127, -18.55), (7, 15, -6.62), (7, 31, -12.92), (15, 63, -12.47), (63, 255, -12.14)],
)
def test_peak_db_published(peak, n, db):
    assert abs(peak_db_wrt_n(peak, n) - db) <= 0.01


def test_peak_db_edges():
    assert peak_db_wrt_n(31, 31) == 0.0
    for bad in (0, -1, None):
        with pytest.raises(ValueError):
            peak_db_wrt_n(bad, 7)
    with pytest.raises(ValueError):
        peak_db_wrt_n(8, 7)


def test_round_half_up():
    assert round_half_up(46.15, 1) == 46.2
    assert round_half_up(-12.925, 2) == -12.93
    assert round_half_up(34.44, 1) == 34.4


def _pn_pair_report(n, base, partner):
    fam = build_pn_family(n)
    i = fam.polynomials.index(parse_polynomial(base))
    j = fam.polynomials.index(parse_polynomial(partner))
    return family_report(fam, pairs=[(i, j)])


def test_pn_degree5_pair_report():
    rep = _pn_pair_report(5, "x^5+x^4+x^3+x^2+1", "x^5+x^2+1")
    assert rep.acf_values == [-1, 31]
    assert rep.ccf_values == [-9, -1, 7]
    assert abs(rep.peak_ccf_db - (-12.92)) <= 0.01
    assert rep.acf_impulsive and rep.peak_sidelobe_acf is None and rep.peak_sidelobe_acf_db is None
    assert rep.family_size == 6 and rep.ccf_pairs == 1


def test_pn_degree5_all_pairs_is_wider():
    # distinct m-sequences are not all preferred partners
    rep = family_report(build_pn_family(5))
    assert rep.ccf_values == [-9, -5, -1, 3, 7, 11]
    assert rep.ccf_pairs == 15


def test_gold_degree6_report():
    rep = family_report(build_gold_family("x^6+x^5+x^2+x+1", "x^6+x+1"))
    assert rep.acf_values == [-17, -1, 15, 63]
    assert rep.ccf_values == [-17, -1, 15]
    assert abs(rep.peak_sidelobe_acf_db - (-12.47)) <= 0.01


def test_gold_degree3_percent():
    fam = build_gold_family("x^3+x^2+1", "x^3+x+1")
    assert abs(percent_minus_one(fam) - 53.0) <= 1.0
    # 9 codes -> 36 pairs; -1 counts checked against a brute-force tally
    hits_two_sided = hits_cyclic = 0
    for i in range(9):
        for j in range(i + 1, 9):
            c = cyclic_corr(fam[i].chips.tolist(), fam[j].chips.tolist())
            hits_cyclic += c.count(-1)
            hits_two_sided += c.count(-1) + c[1:].count(-1)
    assert percent_minus_one(fam, lags="cyclic") == pytest.approx(100 * hits_cyclic / (36 * 7))
    assert percent_minus_one(fam) == pytest.approx(100 * hits_two_sided / (36 * 13))


def test_percent_all_minus_one():
    a = ChipSequence([1, 1, -1])
    b = ChipSequence([1, 1, 1])
    fam = CodeFamily("pn", 2, (a, b), ())
    assert periodic_ccf(a, b).value_set() == [1]
    # cyclic CCF is -1 at every shift
    c = ChipSequence([-1, -1, -1])
    d = ChipSequence([1, 1, -1])
    assert periodic_ccf(c, d).value_set() == [-1]
    assert percent_minus_one(CodeFamily("pn", 2, (c, d), ())) == 100.0
    assert percent_minus_one(CodeFamily("pn", 2, (c, d), ()), lags="cyclic") == 100.0
    assert percent_minus_one(fam) == 0.0


def test_percent_needs_pairs():
    fam = CodeFamily("pn", 3, (generate_pn("x^3+x+1"),), ())
    with pytest.raises(ValueError):
        percent_minus_one(fam)
    with pytest.raises(ValueError):
        family_report(fam)


@settings(max_examples=20, deadline=None)
@given(st.integers(2, 6), st.integers(1, 4))
def test_report_independent_of_workers(m, workers):
    fam = build_gold_family("x^4+x^3+1", "x^4+x+1")
    sub = CodeFamily("gold", 4, fam.codes[:m + 1], fam.polynomials)
    assert family_report(sub, workers=workers) == family_report(sub, workers=1)


def test_report_matches_direct_aggregation():
    fam = build_gold_family("x^4+x^3+1", "x^4+x+1")
    acf, ccf = set(), set()
    for i, a in enumerate(fam.codes):
        acf |= set(periodic_acf(a).values[1:].tolist())
        for b in fam.codes[i + 1:]:
            ccf |= set(periodic_ccf(a, b).values.tolist())
    rep = family_report(fam)
    assert rep.acf_values == sorted(acf | {15})
    assert rep.ccf_values == sorted(ccf)
    assert rep.peak_ccf == max(v for v in ccf if v > 0)
    assert all(x <= 0 for x in (rep.peak_ccf_db, rep.peak_sidelobe_acf_db))


def test_report_round_trip():
    rep = family_report(build_gold_family("x^3+x^2+1", "x^3+x+1"))
    again = FamilyCorrelationReport.from_dict(json.loads(json.dumps(rep.to_dict())))
    assert again == rep


def test_profile_exports():
    prof = periodic_acf(generate_pn("x^3+x^2+1"))
    assert prof.to_csv().splitlines()[:2] == ["shift,value", "0,7"]
    d = json.loads(prof.to_json())
    assert d["values"] == [7] + [-1] * 6 and d["mode"] == "periodic"
    assert prof.peak_positive() is None
    assert len(prof) == 7
