import math

import pytest
from hypothesis import given, settings, strategies as st

from seqmeter.bitseq import BitSequence
from seqmeter.bounds import (
    log_complexity_bound,
    fermat_complexity_bound,
    find_half_peak_witness,
    half_peak_threshold,
    hall_complexity_bound,
    kerror_bound,
    lc_correlation_bound,
    moc_correlation_bound,
    moc_half_peak_check,
    table1,
    table1_row,
)
from seqmeter.complexity import (
    kerror_linear_complexity,
    linear_complexity,
    max_order_complexity,
)
from seqmeter.correlation import aperiodic_measure, correlation_at
from seqmeter.generators import m_sequence


def corr_map(seq, n, k_hi):
    return {k: aperiodic_measure(seq, k, n).value for k in range(1, k_hi + 1)}


def test_half_peak_threshold_values():
    assert half_peak_threshold(62, 5) == (2, 4)
    assert half_peak_threshold(8, 2) == (1, 2)
    assert half_peak_threshold(20, 10) is None
    with pytest.raises(ValueError):
        half_peak_threshold(1, 3)
    with pytest.raises(ValueError):
        half_peak_threshold(10, -1)


def test_log_bound_values():
    assert log_complexity_bound(2, 16) == 3.5
    expected = 1.5 * (10 + 1 - math.log2(3)) - 0.5 * math.log2(3)
    assert log_complexity_bound(3, 1024) == pytest.approx(expected, abs=1e-12)
    assert log_complexity_bound(2, 16, delta=1.0) == 4.5
    with pytest.raises(ValueError):
        log_complexity_bound(1, 100)
    with pytest.raises(ValueError):
        log_complexity_bound(4, 16)  # K^2 must stay under N


def test_lc_scan_fires_on_msequence():
    # shift set (0,1,3) pushes C_3 to 11 on the 14-bit window, so the
    # first self-consistent point of the scan is 14 - 11 = 3
    rep = lc_correlation_bound(corr_map(m_sequence(3), 14, 4), 14)
    assert rep.name == "lc-from-correlation"
    assert rep.fired and rep.value == 3
    assert rep.inputs["max_corr"] == 11


def test_lc_scan_can_run_out_of_orders():
    rep = lc_correlation_bound(corr_map(m_sequence(5), 31, 4), 31)
    assert not rep.fired
    assert rep.value is None


def test_scan_rejects_gappy_maps():
    for bad in ({}, {2: 3}, {1: 3, 3: 5}):
        with pytest.raises(ValueError):
            lc_correlation_bound(bad, 10)
        with pytest.raises(ValueError):
            moc_correlation_bound(bad, 10)


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=8, max_value=24), st.data())
def test_fired_bounds_are_sound(n, data):
    bits = data.draw(st.integers(min_value=0, max_value=(1 << n) - 1))
    s = BitSequence.from_int(bits, n)
    cmap = corr_map(s, n, min(5, n))
    rep = lc_correlation_bound(cmap, n)
    if rep.fired:
        assert rep.value <= linear_complexity(s)[0]
    mrep = moc_correlation_bound(cmap, n)
    if mrep.fired:
        assert mrep.value <= max_order_complexity(s)


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=12, max_value=30), st.data())
def test_half_peak_witness_contract(n, data):
    bits = data.draw(st.integers(min_value=0, max_value=(1 << n) - 1))
    s = BitSequence.from_int(bits, n)
    w = find_half_peak_witness(s, n, k_max=6)
    if w is None:
        return
    assert 2 * w["value"] >= n
    assert w["method"] in ("exhaustive", "constructive")
    assert abs(correlation_at(s, w["U"], tuple(w["D"]), n)) == w["value"]


def test_half_peak_witness_constructive_path():
    # tiny complexity relative to n forces the window-collision branch
    s = m_sequence(3, periods=10)  # n = 70, L = 3
    w = find_half_peak_witness(s, 70, k_max=4, budget=10**4)
    assert w is not None
    assert w["method"] == "constructive"
    assert 2 * w["value"] >= 70


def test_moc_half_peak_on_alternating():
    alt = BitSequence.from_int(sum(1 << i for i in range(0, 16, 2)), 16)
    assert max_order_complexity(alt) == 1
    rep = moc_half_peak_check(alt, 16)
    assert rep.fired
    assert rep.inputs["C2"] == 15
    assert rep.inputs["witness"] == [0, 2]
    assert 2 * rep.value >= 16


def test_moc_half_peak_declines_on_high_moc():
    rep = moc_half_peak_check(m_sequence(4), 30)
    assert not rep.fired


def test_table_rows_frozen():
    r = table1_row("large-kasami", 4)
    assert r["threshold"] == 9 and r["matches"]
    r = table1_row("large-kasami", 6)
    assert r["threshold"] == 7 and not r["matches"]
    r = table1_row("m-sequence", 5)
    assert (r["period"], r["dimension"], r["threshold"]) == (31, 5, 3)
    assert table1_row("gold", 3)["threshold"] == 7  # ball count ties 2^L exactly


def test_table_row_validation():
    with pytest.raises(ValueError):
        table1_row("nonesuch", 5)
    with pytest.raises(ValueError):
        table1_row("gold", 4)  # degree divisible by 4
    with pytest.raises(ValueError):
        table1_row("small-kasami", 5)


def test_table_shape():
    rows = table1(20)
    assert len(rows) == 71
    fams = {r["family"] for r in rows}
    assert fams == {"m-sequence", "small-kasami", "gold", "large-kasami",
                    "3-term-trace", "5-term-trace", "welch-gong"}
    assert sum(1 for r in rows if r["family"] == "m-sequence") == 19
    assert sum(1 for r in rows if r["family"] == "gold") == 13


def test_table_known_disagreements():
    rows = table1(20)
    wg = {r["ell"]: r["threshold"] for r in rows if r["family"] == "welch-gong"}
    assert wg == {6: 3, 9: 3, 12: 5, 15: 7, 18: 9}
    ft = {r["ell"]: r["threshold"] for r in rows if r["family"] == "5-term-trace"}
    assert ft[9] == 15 and ft[11] == 13 and ft[19] == 13
    lk = {r["ell"]: r["matches"] for r in rows if r["family"] == "large-kasami"}
    assert lk[4] is True
    assert all(not lk[e] for e in lk if e >= 6)


def test_hall_chain_small_period():
    rep = hall_complexity_bound(31, 0.5)
    assert rep.name == "hall-complexity-bound"
    assert not rep.fired  # order cap floor(eps log2 T / 8) is 0 here
    assert rep.inputs["N"] == 1522
    assert rep.inputs["k_cap"] == 0
    with pytest.raises(ValueError):
        hall_complexity_bound(32, 0.5)
    with pytest.raises(ValueError):
        hall_complexity_bound(31, 0.0)


def test_fermat_chain_small_prime():
    rep = fermat_complexity_bound(11, 0.5)
    assert rep.fired
    assert rep.inputs["N"] == 3021
    assert rep.value == pytest.approx(log_complexity_bound(3, 3021), abs=1e-12)
    with pytest.raises(ValueError):
        fermat_complexity_bound(11, -1.0)


def test_kerror_bound_zero_flips_matches_plain_scan():
    s = BitSequence.from_int(0b1011011000110101, 16)
    plain = lc_correlation_bound(corr_map(s, 16, 2), 16)
    rep = kerror_bound(s, 16, k=2, flips=0)
    assert rep.value == plain.value
    assert rep.fired == plain.fired


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=0, max_value=(1 << 16) - 1),
       st.integers(min_value=0, max_value=2))
def test_kerror_bound_sound(bits, flips):
    s = BitSequence.from_int(bits, 16)
    rep = kerror_bound(s, 16, k=2, flips=flips)
    if rep.fired:
        assert rep.value <= kerror_linear_complexity(s, errors=flips)


def test_report_dict_shape():
    d = lc_correlation_bound({1: 3, 2: 7, 3: 11, 4: 10}, 14).as_dict()
    assert set(d) == {"name", "inputs", "value", "fired", "commentary"}
    assert d["value"] == 3
