import itertools

import pytest
from hypothesis import given, settings, strategies as st

from seqmeter.bitseq import BitSequence, mask
from seqmeter.correlation import (
    BudgetExceededError,
    aperiodic_measure,
    correlation_at,
    delta_under_flips,
    periodic_autocorrelation,
    periodic_measure,
    periodic_search_cost,
    search_cost,
)
from seqmeter.generators import m_sequence


def brute_aperiodic(data, n, k):
    best = 0
    for d in itertools.combinations(range(n), k):
        fold = 0
        for dj in d:
            fold ^= data >> dj
        for u in range(1, n - d[-1] + 1):
            v = u - 2 * (fold & mask(u)).bit_count()
            best = max(best, abs(v))
    return best


def test_all_zero_hits_the_ceiling():
    s = BitSequence.from_int(0, 12)
    for k in (1, 2, 3):
        r = aperiodic_measure(s, k)
        assert r.value == 12 - k + 1
        assert r.classification == "full-peak"
        assert r.witness_u == 12 - k + 1
        assert tuple(r.witness_d) == tuple(range(k))


def test_msequence_periodic_flat():
    seq = m_sequence(3)
    assert periodic_autocorrelation(seq, 0) == 7
    for d in range(1, 7):
        assert periodic_autocorrelation(seq, d) == -1
    r = periodic_measure(seq, 2)
    assert r.value == 1
    assert r.classification == "none"


def test_msequence_periodic_order3_full_peak():
    # x^3 + x + 1 recurrence makes shifts (0,1,3) sum to zero everywhere
    r = periodic_measure(m_sequence(3), 3)
    assert r.value == 7
    assert tuple(r.witness_d) == (0, 1, 3)
    assert r.classification == "full-peak"


def test_witness_reproduces_reported_value():
    seq = m_sequence(3)
    r = aperiodic_measure(seq, 2)
    v = correlation_at(seq, r.witness_u, r.witness_d)
    assert abs(v) == r.value


def test_correlation_at_validates():
    s = BitSequence.from_int(0b1011, 4)
    with pytest.raises(ValueError):
        correlation_at(s, 3, (0, 2))  # 2 + 3 > 4
    with pytest.raises(ValueError):
        correlation_at(s, 0, (0,))
    with pytest.raises(ValueError):
        correlation_at(s, 1, (0, 5), n=4)


def test_result_dict_shape():
    d = aperiodic_measure(BitSequence.from_int(0b101, 3), 1).as_dict()
    assert set(d) == {"k", "value", "U", "D", "classification", "n", "periodic"}


def test_budget_enforced_before_work():
    s = BitSequence.from_int(0, 64)
    cost = search_cost(64, 5)
    with pytest.raises(BudgetExceededError) as exc:
        aperiodic_measure(s, 5, budget=cost - 1)
    assert exc.value.cost == cost
    aperiodic_measure(BitSequence.from_int(0, 10), 2, budget=search_cost(10, 2))


def test_periodic_budget():
    seq = m_sequence(5)  # T = 31
    assert periodic_search_cost(31, 3) == 435 * 31
    with pytest.raises(BudgetExceededError):
        periodic_measure(seq, 3, budget=100)


def test_delta_under_flips():
    assert delta_under_flips(2, 1) == 4
    assert delta_under_flips(3, 2) == 12


@settings(max_examples=120, deadline=None)
@given(st.integers(min_value=2, max_value=11), st.integers(min_value=1, max_value=3), st.data())
def test_matches_bruteforce(n, k, data):
    bits = data.draw(st.integers(min_value=0, max_value=(1 << n) - 1))
    if k > n:
        return
    r = aperiodic_measure(BitSequence.from_int(bits, n), k)
    assert r.value == brute_aperiodic(bits, n, k)


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=2, max_value=12), st.integers(min_value=1, max_value=3), st.data())
def test_complement_invariance(n, k, data):
    # flipping every bit negates each summand at odd k, fixes it at even k;
    # the maximum absolute value is unchanged either way
    if k > n:
        return
    bits = data.draw(st.integers(min_value=0, max_value=(1 << n) - 1))
    a = aperiodic_measure(BitSequence.from_int(bits, n), k)
    b = aperiodic_measure(BitSequence.from_int(bits ^ mask(n), n), k)
    assert a.value == b.value


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=4, max_value=12), st.data())
def test_flip_perturbation_ceiling(n, data):
    k = 2
    bits = data.draw(st.integers(min_value=0, max_value=(1 << n) - 1))
    flips = data.draw(st.integers(min_value=1, max_value=2))
    positions = data.draw(
        st.lists(st.integers(min_value=0, max_value=n - 1),
                 min_size=flips, max_size=flips, unique=True))
    flipped = bits
    for p in positions:
        flipped ^= 1 << p
    a = aperiodic_measure(BitSequence.from_int(bits, n), k).value
    b = aperiodic_measure(BitSequence.from_int(flipped, n), k).value
    assert abs(a - b) <= delta_under_flips(k, flips)


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=6, max_value=16), st.data())
def test_jobs_do_not_change_the_answer(n, data):
    bits = data.draw(st.integers(min_value=0, max_value=(1 << n) - 1))
    s = BitSequence.from_int(bits, n)
    a = aperiodic_measure(s, 2)
    b = aperiodic_measure(s, 2, jobs=3)
    assert a.as_dict() == b.as_dict()


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=2, max_value=10), st.data())
def test_periodic_matches_bitloop(t, data):
    bits = data.draw(st.integers(min_value=0, max_value=(1 << t) - 1))
    s = BitSequence.from_int(bits, t, period=t)
    best = max(abs(periodic_autocorrelation(s, d)) for d in range(1, t)) if t > 1 else 0
    r = periodic_measure(s, 2)
    assert r.value == best
