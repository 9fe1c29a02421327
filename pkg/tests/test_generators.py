import pytest
from hypothesis import given, settings, strategies as st

from seqmeter.bitseq import mask
from seqmeter.complexity import linear_complexity
from seqmeter.generators import (
    DEFAULT_TAPS,
    GOLD_PAIRS,
    FermatSpec,
    HallSpec,
    LfsrSpec,
    NonPrimitiveTapsError,
    default_lfsr_spec,
    fermat_quotient,
    fermat_threshold,
    gold_sequence,
    hall_sextic,
    is_prime,
    m_sequence,
    multiplicative_order,
    small_kasami,
    smallest_primitive_root,
)


@pytest.mark.parametrize("ell", sorted(DEFAULT_TAPS))
def test_msequence_period_and_balance(ell):
    seq = m_sequence(ell)
    t = (1 << ell) - 1
    assert seq.period == t
    assert seq.n == 2 * t
    if ell <= 12:  # the exact scan tries every shorter candidate; quadratic
        assert seq.minimal_period() == t
    # one period carries 2^{ell-1} ones
    block = seq.data & mask(t)
    assert block.bit_count() == 1 << (ell - 1)


@pytest.mark.parametrize("ell", [2, 3, 5, 7, 10])
def test_msequence_linear_complexity(ell):
    assert linear_complexity(m_sequence(ell))[0] == ell


def test_msequence_known_bits():
    # x^3 + x + 1, seed state 1
    assert m_sequence(3).to01() == "10010111001011"


def test_msequence_shift_and_add():
    # sum of a sequence and a nontrivial shift of itself is another shift
    seq = m_sequence(4)
    t = 15
    block = seq.data & mask(t)
    rots = {((block >> r) | (block << (t - r))) & mask(t) for r in range(t)}
    for r in range(1, t):
        shifted = ((block >> r) | (block << (t - r))) & mask(t)
        assert block ^ shifted in rots


def test_nonprimitive_taps_rejected():
    # x^4 + x^2 + 1 = (x^2+x+1)^2 has order 6, not 15
    spec = LfsrSpec.from_exponents(4, (2, 0))
    with pytest.raises(NonPrimitiveTapsError) as exc:
        m_sequence(spec)
    assert exc.value.observed == 6


def test_lfsr_spec_validation():
    with pytest.raises(ValueError):
        LfsrSpec.from_masks(4, taps=0b0011, seed=0)  # zero seed
    with pytest.raises(ValueError):
        LfsrSpec.from_masks(1, taps=0b1, seed=1)  # degree too small
    with pytest.raises(ValueError):
        default_lfsr_spec(21)  # no default taps that high


@pytest.mark.parametrize("ell", sorted(GOLD_PAIRS))
def test_gold_linear_complexity(ell):
    seq = gold_sequence(ell)
    assert seq.period == (1 << ell) - 1
    assert linear_complexity(seq)[0] == 2 * ell


def test_gold_shift_changes_sequence():
    a = gold_sequence(5, shift=0)
    b = gold_sequence(5, shift=1)
    assert a.data != b.data
    assert a.period == b.period


def test_gold_rejects_bad_degree():
    with pytest.raises(ValueError):
        gold_sequence(4)  # ell % 4 == 0 has no preferred pair


@pytest.mark.parametrize("ell", [4, 6, 8])
def test_small_kasami_linear_complexity(ell):
    seq = small_kasami(ell)
    assert seq.period == (1 << ell) - 1
    assert linear_complexity(seq)[0] == 3 * ell // 2


def test_small_kasami_rejects_odd():
    with pytest.raises(ValueError):
        small_kasami(5)


def test_primality_helpers():
    assert [p for p in range(2, 20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert not is_prime(1)
    assert multiplicative_order(3, 7) == 6
    assert multiplicative_order(2, 7) == 3
    assert smallest_primitive_root(7) == 3
    assert smallest_primitive_root(13) == 2


@pytest.mark.parametrize("t", [7, 13, 19, 31, 37])
def test_hall_period_and_weight(t):
    seq = hall_sextic(t)
    assert seq.period == t
    assert seq.minimal_period() == t
    assert seq.prefix(t).weight() == (t - 1) // 2


def test_hall_known_prefix():
    # t=7, generator 3: cosets {0,1,3} of the sextic classes
    assert hall_sextic(7).prefix(7).to01() == "0101001"


def test_hall_rejects_bad_modulus():
    with pytest.raises(ValueError):
        HallSpec(8)  # not prime
    with pytest.raises(ValueError):
        HallSpec(11)  # not 1 mod 6
    with pytest.raises(ValueError):
        HallSpec(13, generator=3)  # 3^3 = 1 mod 13, not primitive


def test_fermat_quotient_values():
    # q_5(2): (2^4 - 1)/5 = 3 mod 5
    assert fermat_quotient(5, 2) == 3
    assert fermat_quotient(5, 10) == 0
    assert fermat_quotient(3, 2) == 1


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_fermat_threshold_structure(p):
    seq = fermat_threshold(p)
    assert seq.period == p * p
    assert (p * p) % seq.minimal_period() == 0
    # zero at every multiple of p
    assert all(seq.bit(k * p) == 0 for k in range(p))


def test_fermat_known_prefix():
    assert fermat_threshold(3).prefix(9).to01() == "000011000"


def test_fermat_rejects_composite():
    with pytest.raises(ValueError):
        FermatSpec(9)
    with pytest.raises(ValueError):
        FermatSpec(2)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(sorted(DEFAULT_TAPS)), st.integers(min_value=1, max_value=6))
def test_msequence_periods_parameter(ell, periods):
    t = (1 << ell) - 1
    seq = m_sequence(ell, periods=periods)
    assert seq.n == periods * t
    base = m_sequence(ell, periods=1).data
    for r in range(periods):
        assert (seq.data >> (r * t)) & mask(t) == base
