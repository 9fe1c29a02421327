"""Nth linear complexity and Nth maximum-order complexity.

Conventions used throughout:

* L(S,N) = 0 for an all-zero prefix, and L(S,N) = N when the prefix is
  0...01.  The returned coefficients c_0..c_{L-1} satisfy
  s[i+L] = c_{L-1} s[i+L-1] + ... + c_0 s[i] over GF(2) for 0 <= i < N-L.
* M(S,N) is the smallest M >= 0 such that equal length-M windows inside
  the first N bits never disagree on the following bit.  The all-zero
  (or any constant) prefix therefore gets M = 0, mirroring the linear
  complexity convention for the degenerate case.

Both measures come with small-scale exhaustive oracles so the fast paths
can be checked against the bare definitions.
"""

from dataclasses import dataclass
from itertools import combinations

from .bitseq import BitSequence, mask

KERROR_MAX_N = 24


@dataclass(frozen=True)
class ComplexityProfile:
    """Per-N values of a complexity measure over prefixes 1..N."""

    kind: str  # "linear" or "maximum-order"
    values: tuple[int, ...]
    coefficients: tuple[int, ...] | None = None  # recurrence for the full prefix

    @property
    def final(self) -> int:
        return self.values[-1] if self.values else 0


def _data_n(seq: BitSequence | int, n: int | None, fallback_n: int | None = None):
    if isinstance(seq, BitSequence):
        if n is None:
            n = seq.n
        elif not 0 <= n <= seq.n:
            raise ValueError(f"prefix length {n} out of range 0..{seq.n}")
        return seq.data & mask(n), n
    if n is None:
        n = fallback_n
    if n is None:
        raise ValueError("raw int input needs an explicit length")
    return seq & mask(n), n


def _berlekamp_massey(data: int, n: int, want_profile: bool = False):
    """Core synthesis. Returns (L, connection poly as bitmask, profile or None).

    The connection polynomial bitmask has bit j = coefficient of x^j, with
    C(x) = 1 + C_1 x + ... annihilating the prefix: s[i] = sum_j C_j s[i-j].
    The reversed-prefix register makes each discrepancy one AND plus one
    popcount on packed words.
    """
    c, b = 1, 1
    l, m = 0, -1
    rev = 0  # bits s_i..s_0, most recent at bit 0
    profile = [] if want_profile else None
    for i in range(n):
        rev = (rev << 1) | ((data >> i) & 1)
        if (c & rev).bit_count() & 1:
            t = c
            c ^= b << (i - m)
            if 2 * l <= i:
                l, m, b = i + 1 - l, i, t
        if profile is not None:
            profile.append(l)
    return l, c, profile


def _recurrence_from_connection(conn: int, l: int) -> tuple[int, ...]:
    # c_m = C_{L-m}: coefficient of s[i+m] in the prediction of s[i+L]
    return tuple((conn >> (l - m)) & 1 for m in range(l))


def linear_complexity(seq: BitSequence | int, n: int | None = None) -> tuple[int, tuple[int, ...]]:
    """Nth linear complexity with a witnessing recurrence.

    Returns (L, (c_0, ..., c_{L-1})).  The coefficient tuple is empty for
    the all-zero prefix.
    """
    data, n = _data_n(seq, n)
    l, conn, _ = _berlekamp_massey(data, n)
    return l, _recurrence_from_connection(conn, l)


def linear_complexity_profile(seq: BitSequence | int, n: int | None = None) -> ComplexityProfile:
    data, n = _data_n(seq, n)
    l, conn, prof = _berlekamp_massey(data, n, want_profile=True)
    return ComplexityProfile("linear", tuple(prof), _recurrence_from_connection(conn, l))


def recurrence_holds(seq: BitSequence | int, coeffs: tuple[int, ...], n: int | None = None) -> bool:
    """Check s[i+L] == sum_m c_m s[i+m] for all 0 <= i < n-L."""
    data, n = _data_n(seq, n)
    l = len(coeffs)
    cmask = 0
    for m, c in enumerate(coeffs):
        cmask |= c << m
    for i in range(n - l):
        pred = (cmask & (data >> i)).bit_count() & 1
        if pred != (data >> (i + l)) & 1:
            return False
    return True


def linear_complexity_bruteforce(seq: BitSequence | int, n: int | None = None) -> int:
    """Definition-level oracle: try every (L, coefficient vector) in increasing L.

    Exponential in L; intended for cross-checking at toy sizes.
    """
    data, n = _data_n(seq, n)
    if data == 0:
        return 0
    for l in range(1, n + 1):
        w = n - l
        wins = [(data >> i) & mask(l) for i in range(w)]
        succ = [(data >> (i + l)) & 1 for i in range(w)]
        for c in range(1 << l):
            for win, s in zip(wins, succ):
                if (c & win).bit_count() & 1 != s:
                    break
            else:
                return l
    return n


def _consistent_table(data: int, n: int, m: int) -> dict[int, int] | None:
    """Successor table for m-windows over the first n bits, or None on conflict."""
    table: dict[int, int] = {}
    mm = mask(m)
    for i in range(n - m):
        w = (data >> i) & mm
        s = (data >> (i + m)) & 1
        if table.setdefault(w, s) != s:
            return None
    return table


def max_order_complexity(seq: BitSequence | int, n: int | None = None) -> int:
    """Nth maximum-order complexity via the window-consistency scan."""
    data, n = _data_n(seq, n)
    m = 0
    while _consistent_table(data, n, m) is None:
        m += 1
    return m


def max_order_complexity_profile(seq: BitSequence | int, n: int | None = None) -> ComplexityProfile:
    """M(S,N) for every prefix length 1..N.

    Incremental: each new bit adds one window constraint; on conflict the
    window grows and the table is rebuilt, which happens at most M_final
    times overall.
    """
    data, n = _data_n(seq, n)
    values = []
    m = 0
    table: dict[int, int] = {}
    for length in range(1, n + 1):
        i = length - 1 - m
        while True:
            if i >= 0:
                w = (data >> i) & mask(m)
                s = (data >> (i + m)) & 1
                if table.setdefault(w, s) != s:
                    m += 1
                    while (t := _consistent_table(data, length, m)) is None:
                        m += 1
                    table = t
                    i = -1  # rebuilt tables already include every constraint
                    continue
            break
        values.append(m)
    return ComplexityProfile("maximum-order", tuple(values))


def max_order_complexity_bruteforce(seq: BitSequence | int, n: int | None = None) -> int:
    """Definition-level oracle: materialize every (window, successor) pair.

    A window size is conflicting iff two equal windows carry different
    successors, which sorting makes adjacent.  No shared machinery with
    the incremental table scan above.
    """
    data, n = _data_n(seq, n)
    for m in range(n):
        pairs = sorted(
            (((data >> i) & mask(m)) << 1) | ((data >> (i + m)) & 1)
            for i in range(n - m)
        )
        if all(
            a >> 1 != b >> 1 or a == b
            for a, b in zip(pairs, pairs[1:])
        ):
            return m
    return 0 if n == 0 else n


def kerror_linear_complexity(seq: BitSequence | int, n: int | None = None, errors: int = 0) -> int:
    """Minimum L(S',N) over all S' within Hamming distance `errors` of the prefix.

    Exhaustive over every flip pattern of weight <= errors, so n is capped
    at KERROR_MAX_N.
    """
    data, n = _data_n(seq, n)
    if n > KERROR_MAX_N:
        raise ValueError(f"exhaustive k-error search is capped at n <= {KERROR_MAX_N}")
    if errors < 0 or errors > n:
        raise ValueError(f"error count {errors} out of range 0..{n}")
    best = _berlekamp_massey(data, n)[0]
    for w in range(1, errors + 1):
        if best == 0:
            break
        for pos in combinations(range(n), w):
            flip = 0
            for p in pos:
                flip |= 1 << p
            l = _berlekamp_massey(data ^ flip, n)[0]
            if l < best:
                best = l
                if best == 0:
                    break
    return best
