"""Reference sequence families: LFSR based, Hall sextic residue, Fermat quotient.

Primitivity of a feedback polynomial is certified operationally: the state
orbit of the register must return to the seed after exactly 2**ell - 1
steps.  No factorization is involved, so the check works for arbitrary
user-supplied taps and reports the observed cycle length on failure.

Every generator returns a BitSequence with the period declared, rendered
over `periods` full periods (default 2, enough for recurrence synthesis
and exact minimal-period scans downstream).
"""

from dataclasses import dataclass

from .bitseq import BitSequence, mask
from .complexity import linear_complexity


class NonPrimitiveTapsError(ValueError):
    """Feedback taps whose state orbit misses the full cycle."""

    def __init__(self, degree: int, observed: int | None):
        self.degree = degree
        self.observed = observed
        want = (1 << degree) - 1
        if observed is None:
            msg = f"state orbit does not return to the seed within {want} steps"
        else:
            msg = f"observed cycle length {observed}, want {want}"
        super().__init__(f"taps are not primitive for degree {degree}: {msg}")


class NotPreferredPairError(ValueError):
    """Polynomial pair whose XOR sequence misses the expected complexity."""

    def __init__(self, expected: int, observed: int):
        self.expected = expected
        self.observed = observed
        super().__init__(
            f"pair is not preferred: combined linear complexity {observed}, want {expected}"
        )


# Connection polynomial exponents below the leading term, x**ell + sum(x**e).
# Each entry is certified primitive by the cycle-length check in the tests.
DEFAULT_TAPS: dict[int, tuple[int, ...]] = {
    2: (1, 0), 3: (1, 0), 4: (1, 0), 5: (2, 0), 6: (1, 0), 7: (1, 0),
    8: (4, 3, 2, 0), 9: (4, 0), 10: (3, 0), 11: (2, 0), 12: (6, 4, 1, 0),
    13: (4, 3, 1, 0), 14: (10, 6, 1, 0), 15: (1, 0), 16: (12, 3, 1, 0),
    17: (3, 0), 18: (7, 0), 19: (5, 2, 1, 0), 20: (3, 0),
}

# Preferred pairs for the Gold construction, as (taps_a, taps_b) exponent
# lists.  Shipped for these degrees only; other degrees need explicit taps.
GOLD_PAIRS: dict[int, tuple[tuple[int, ...], tuple[int, ...]]] = {
    5: ((2, 0), (4, 3, 2, 0)),
    6: ((1, 0), (5, 2, 1, 0)),
    7: ((3, 0), (3, 2, 1, 0)),
    9: ((4, 0), (6, 4, 3, 0)),
    10: ((3, 0), (9, 8, 6, 3, 2, 0)),
    11: ((2, 0), (8, 5, 2, 0)),
}


@dataclass(frozen=True)
class LfsrSpec:
    """Degree-ell binary LFSR: s[i+ell] = c_{ell-1} s[i+ell-1] + ... + c_0 s[i].

    taps holds (c_0, ..., c_{ell-1}); seed holds (s_0, ..., s_{ell-1}).
    """

    degree: int
    taps: tuple[int, ...]
    seed: tuple[int, ...]

    def __post_init__(self):
        if self.degree < 2:
            raise ValueError(f"degree must be >= 2, got {self.degree}")
        for name, bits in (("taps", self.taps), ("seed", self.seed)):
            if len(bits) != self.degree:
                raise ValueError(f"{name} must have length {self.degree}, got {len(bits)}")
            if any(b not in (0, 1) for b in bits):
                raise ValueError(f"{name} must be 0/1 valued")
        if not any(self.seed):
            raise ValueError("seed must be nonzero")

    @classmethod
    def from_masks(cls, degree: int, taps: int, seed: int = 1) -> "LfsrSpec":
        return cls(
            degree,
            tuple((taps >> j) & 1 for j in range(degree)),
            tuple((seed >> j) & 1 for j in range(degree)),
        )

    @classmethod
    def from_exponents(cls, degree: int, exponents: tuple[int, ...], seed: int = 1) -> "LfsrSpec":
        taps = 0
        for e in exponents:
            if not 0 <= e < degree:
                raise ValueError(f"exponent {e} out of range for degree {degree}")
            taps |= 1 << e
        return cls.from_masks(degree, taps, seed)

    @property
    def taps_mask(self) -> int:
        m = 0
        for j, c in enumerate(self.taps):
            m |= c << j
        return m

    @property
    def seed_mask(self) -> int:
        m = 0
        for j, b in enumerate(self.seed):
            m |= b << j
        return m


def default_lfsr_spec(ell: int) -> LfsrSpec:
    if ell not in DEFAULT_TAPS:
        raise ValueError(f"no default taps for degree {ell}; supply taps explicitly")
    return LfsrSpec.from_exponents(ell, DEFAULT_TAPS[ell])


def _msequence_period(spec: LfsrSpec) -> int:
    """One full period as a packed int, certifying the full cycle on the way."""
    ell = spec.degree
    taps = spec.taps_mask
    seed = spec.seed_mask
    T = (1 << ell) - 1
    top = ell - 1
    state = seed
    # bytearray accumulation keeps this linear; |= (1 << i) on a growing int
    # would copy the whole word each step and go quadratic past ell ~ 16
    buf = bytearray((T + 7) >> 3)
    for i in range(T):
        if state & 1:
            buf[i >> 3] |= 1 << (i & 7)
        state = (state >> 1) | (((state & taps).bit_count() & 1) << top)
        if state == seed:
            if i + 1 < T:
                raise NonPrimitiveTapsError(ell, i + 1)
            return int.from_bytes(buf, "little")
    raise NonPrimitiveTapsError(ell, None)


def _tile(block: int, block_len: int, copies: int) -> int:
    data = 0
    for r in range(copies):
        data |= block << (r * block_len)
    return data


def m_sequence(spec: LfsrSpec | int, periods: int = 2) -> BitSequence:
    """Maximal-length LFSR sequence, period 2**ell - 1.

    Accepts a full LfsrSpec or a bare degree (which uses the shipped taps
    and the standard 10...0 seed).
    """
    if isinstance(spec, int):
        spec = default_lfsr_spec(spec)
    if periods < 1:
        raise ValueError("periods must be >= 1")
    T = (1 << spec.degree) - 1
    block = _msequence_period(spec)
    return BitSequence.from_int(_tile(block, T, periods), T * periods, period=T)


def _rotate_right(block: int, length: int, shift: int) -> int:
    # bit i of the result is bit (i+shift) mod length of the input
    shift %= length
    if shift == 0:
        return block
    return ((block >> shift) | (block << (length - shift))) & mask(length)


def gold_sequence(
    ell: int,
    shift: int = 0,
    taps_pair: tuple[tuple[int, ...], tuple[int, ...]] | None = None,
    periods: int = 2,
) -> BitSequence:
    """Gold sequence: XOR of an m-sequence with a shifted companion m-sequence.

    Requires ell odd or ell == 2 (mod 4); preferred pairs exist for no other
    degrees.  The combined linear complexity is verified to be exactly 2*ell
    by recurrence synthesis over two periods, which catches any pair that is
    not preferred.
    """
    if ell % 2 == 0 and ell % 4 != 2:
        raise ValueError(f"no preferred pairs exist for degree {ell} (need odd or 2 mod 4)")
    if taps_pair is None:
        if ell not in GOLD_PAIRS:
            raise ValueError(f"no shipped preferred pair for degree {ell}; supply taps_pair")
        taps_pair = GOLD_PAIRS[ell]
    T = (1 << ell) - 1
    u = _msequence_period(LfsrSpec.from_exponents(ell, taps_pair[0]))
    v = _msequence_period(LfsrSpec.from_exponents(ell, taps_pair[1]))
    block = u ^ _rotate_right(v, T, shift)
    data = _tile(block, T, max(periods, 2))
    observed, _ = linear_complexity(data, 2 * T)
    if observed != 2 * ell:
        raise NotPreferredPairError(2 * ell, observed)
    return BitSequence.from_int(data & mask(T * periods), T * periods, period=T)


def small_kasami(ell: int, shift: int = 0, periods: int = 2) -> BitSequence:
    """Small-set Kasami sequence: m-sequence XOR its (2**(ell/2)+1)-decimation.

    ell must be even.  The decimated sequence lives in the half-degree
    subfield, so the combined linear complexity is 3*ell/2 (verified).
    """
    if ell % 2:
        raise ValueError(f"small Kasami needs even degree, got {ell}")
    T = (1 << ell) - 1
    u = _msequence_period(default_lfsr_spec(ell))
    d = (1 << (ell // 2)) + 1
    buf = bytearray((T + 7) >> 3)
    for i in range(T):
        if (u >> (d * (i + shift) % T)) & 1:
            buf[i >> 3] |= 1 << (i & 7)
    block = u ^ int.from_bytes(buf, "little")
    data = _tile(block, T, max(periods, 2))
    observed, _ = linear_complexity(data, 2 * T)
    expected = 3 * ell // 2
    if observed != expected:
        raise ValueError(f"decimation degenerated: combined complexity {observed}, want {expected}")
    return BitSequence.from_int(data & mask(T * periods), T * periods, period=T)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def multiplicative_order(g: int, modulus: int) -> int:
    if g % modulus == 0:
        raise ValueError("g must be a unit")
    acc = g % modulus
    k = 1
    while acc != 1:
        acc = acc * g % modulus
        k += 1
        if k >= modulus:
            raise ValueError(f"{g} is not a unit modulo {modulus}")
    return k


def smallest_primitive_root(t: int) -> int:
    for g in range(2, t):
        if multiplicative_order(g, t) == t - 1:
            return g
    raise ValueError(f"no primitive root modulo {t}")


@dataclass(frozen=True)
class HallSpec:
    """Hall sextic residue parameters: prime T = 1 (mod 6) and a primitive root."""

    period: int
    generator: int | None = None  # None = smallest primitive root

    def __post_init__(self):
        if not is_prime(self.period):
            raise ValueError(f"period {self.period} is not prime")
        if self.period % 6 != 1:
            raise ValueError(f"period {self.period} is not 1 mod 6")
        if (self.generator is not None
                and multiplicative_order(self.generator, self.period) != self.period - 1):
            raise ValueError(f"{self.generator} is not a primitive root modulo {self.period}")

    def resolved_generator(self) -> int:
        if self.generator is None:
            return smallest_primitive_root(self.period)
        return self.generator


def hall_sextic(spec: HallSpec | int, periods: int = 2) -> BitSequence:
    """Hall's sextic residue sequence.

    h_n = 1 iff n mod T falls in the sextic power classes 0, 1 or 3 of the
    chosen primitive root.  Weight over one period is (T-1)/2; h_0 = 0.
    """
    if isinstance(spec, int):
        spec = HallSpec(spec)
    T = spec.period
    g = spec.resolved_generator()
    cls: dict[int, int] = {}
    v = 1
    for e in range(T - 1):
        cls[v] = e % 6
        v = v * g % T
    buf = bytearray((T + 7) >> 3)
    for n in range(1, T):
        if cls[n] in (0, 1, 3):
            buf[n >> 3] |= 1 << (n & 7)
    block = int.from_bytes(buf, "little")
    return BitSequence.from_int(_tile(block, T, periods), T * periods, period=T)


@dataclass(frozen=True)
class FermatSpec:
    """Fermat quotient threshold parameters: an odd prime p (word-size)."""

    p: int

    def __post_init__(self):
        if not is_prime(self.p) or self.p == 2:
            raise ValueError(f"p must be an odd prime, got {self.p}")
        if self.p >= 1 << 31:
            raise ValueError("p must fit in 31 bits")


def fermat_quotient(p: int, u: int) -> int:
    """q_p(u) in 0..p-1, with q_p(u) = 0 when p divides u."""
    if u % p == 0:
        return 0
    # u**(p-1) = 1 + p*q (mod p**2); everything stays below p**2
    x = pow(u, p - 1, p * p)
    return (x - 1) // p


def fermat_threshold(spec: FermatSpec | int, periods: int = 2) -> BitSequence:
    """Binary threshold sequence of Fermat quotients, period p**2.

    e_u = 0 iff q_p(u)/p < 1/2, evaluated exactly as 2*q < p.
    """
    if isinstance(spec, int):
        spec = FermatSpec(spec)
    p = spec.p
    T = p * p
    buf = bytearray((T + 7) >> 3)
    for u in range(T):
        if 2 * fermat_quotient(p, u) >= p:
            buf[u >> 3] |= 1 << (u & 7)
    block = int.from_bytes(buf, "little")
    return BitSequence.from_int(_tile(block, T, periods), T * periods, period=T)
