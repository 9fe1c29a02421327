"""Lower bounds linking complexity measures to correlation measures.

Two classical relations are evaluated by a self-consistent ascending
scan (the unknown appears on both sides of each inequality, so the scan
returns the weakest certified reading):

    L(S,N) >= N - max_{1<=k<=L+1} C_k(S,N)
    M(S,N) >= N - 2**(M+1) * max_{1<=k<=M+1} C_k(S,N)

The sphere-packing thresholds turn the same correlation data around:
once enough shift sets exist to exhaust the recurrence's state space, a
peak is forced.  All fired/not-fired decisions use exact integers; only
display values are floats.

Convention: every logarithm here is log base 2.
"""

import math
from dataclasses import dataclass, field

from .bitseq import BitSequence, mask
from .codes import full_peak_threshold, low_weight_kernel_support
from .complexity import linear_complexity, max_order_complexity
from .correlation import (
    DEFAULT_BUDGET,
    aperiodic_measure,
    correlation_at,
    delta_under_flips,
    search_cost,
)

# exhaustive order-k search is only attempted below this many summands
# before falling back to the constructive window-collision argument
EXHAUSTIVE_FALLBACK_COST = 250_000


@dataclass(frozen=True)
class BoundReport:
    name: str
    inputs: dict
    value: float | int | None
    fired: bool
    commentary: str = ""

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "inputs": self.inputs,
            "value": self.value,
            "fired": self.fired,
            "commentary": self.commentary,
        }


def _contiguous_corr(corr: dict) -> list[int]:
    if not corr:
        raise ValueError("empty correlation map")
    ks = sorted(corr)
    if ks[0] != 1 or ks != list(range(1, len(ks) + 1)):
        raise ValueError(f"correlation map must cover k = 1..K, got keys {ks}")
    return [corr[k] for k in ks]


def lc_correlation_bound(corr: dict, n: int) -> BoundReport:
    """Certified lower bound on linear complexity from correlation data.

    Ascending scan: the smallest l with l >= n - max_{k<=l+1} C_k is
    self-consistent, hence certified (any smaller complexity would
    violate the relation).  Needs corr to reach k = l+1, so the scan is
    limited to l <= K-1.
    """
    values = _contiguous_corr(corr)
    running = 0
    for ell in range(len(values)):
        running = max(running, values[ell])  # covers k = 1..ell+1
        if ell >= n - running:
            return BoundReport(
                "lc-from-correlation",
                {"N": n, "K": len(values), "max_corr": running},
                ell,
                True,
                f"L >= {ell}: max C_k over k <= {ell + 1} is {running}",
            )
    return BoundReport(
        "lc-from-correlation",
        {"N": n, "K": len(values)},
        None,
        False,
        "no self-consistent point within the supplied correlation orders",
    )


def moc_correlation_bound(corr: dict, n: int) -> BoundReport:
    """Analogous certified bound on maximum-order complexity."""
    values = _contiguous_corr(corr)
    running = 0
    for m in range(len(values)):
        running = max(running, values[m])
        if m + (1 << (m + 1)) * running >= n:
            return BoundReport(
                "moc-from-correlation",
                {"N": n, "K": len(values), "max_corr": running},
                m,
                True,
                f"M >= {m}: {m} + 2^{m + 1}*{running} >= {n}",
            )
    return BoundReport(
        "moc-from-correlation",
        {"N": n, "K": len(values)},
        None,
        False,
        "no self-consistent point within the supplied correlation orders",
    )


def half_peak_threshold(n: int, l: int) -> tuple[int, int] | None:
    """Smallest t with C(floor(n/2), t) >= 2**l, and the order cap 2t.

    When it exists, a half peak C_k >= n/2 is guaranteed for some order
    1 < k <= 2t.  None when no t works (the binomial peaks at n/4 and
    may never reach 2**l).
    """
    if l < 0 or n < 2:
        raise ValueError("need l >= 0 and n >= 2")
    goal = 1 << l
    half = n // 2
    for t in range(1, half + 1):
        if math.comb(half, t) >= goal:
            return t, 2 * t
    return None


def log_complexity_bound(k: int, n: int, delta: float = 0.0) -> float:
    """(K/2)(log2 N + 1 - log2 K) - (1/2) log2 K + delta.

    Valid as a linear-complexity lower bound when C_j(S,N) < N/2 for
    every j < K.  delta is an unpinned additive constant, default 0.
    """
    if k < 2:
        raise ValueError(f"K must be >= 2, got {k}")
    if k * k >= n:
        raise ValueError(f"need K^2 < N, got K={k}, N={n}")
    return 0.5 * k * (math.log2(n) + 1 - math.log2(k)) - 0.5 * math.log2(k) + delta


def find_half_peak_witness(
    seq: BitSequence,
    n: int,
    k_max: int,
    budget: int = DEFAULT_BUDGET,
) -> dict | None:
    """A verified witness of C_k(S,n) >= n/2 for some 2 <= k <= k_max.

    Orders whose exhaustive search is cheap are searched outright.  Above
    the fallback cost the witness is built constructively: the windows
    col_j = (s_j, ..., s_{j+ceil(n/2)-1}), j < floor(n/2), span a space of
    dimension <= L(S,n), so a low-weight XOR collision among them gives a
    shift set whose summands are all +1 on a window of length ceil(n/2).
    Both paths re-verify the witness with correlation_at.
    """
    data = seq.data & mask(n)
    exhausted_all = True
    for k in range(2, k_max + 1):
        if search_cost(n, k) > min(EXHAUSTIVE_FALLBACK_COST, budget):
            exhausted_all = False
            break
        r = aperiodic_measure(seq, k, n, budget=budget)
        if 2 * r.value >= n:
            return {
                "k": k,
                "U": r.witness_u,
                "D": list(r.witness_d),
                "value": r.value,
                "method": "exhaustive",
            }
    if exhausted_all:
        return None
    width = n - n // 2  # ceil(n/2)
    cols = [(data >> j) & mask(width) for j in range(n // 2)]
    support = low_weight_kernel_support(cols, w_min=2, w_max=k_max)
    if support is None:
        return None
    value = correlation_at(seq, width, support, n)
    if value != width:
        raise AssertionError(f"window collision {support} failed re-verification")
    return {
        "k": len(support),
        "U": width,
        "D": list(support),
        "value": value,
        "method": "constructive",
    }


def moc_half_peak_check(
    seq: BitSequence,
    n: int | None = None,
    budget: int = DEFAULT_BUDGET,
) -> BoundReport:
    """Low maximum-order complexity forces an order-2 half peak.

    Fires when 2**(M+2) <= n (exact-integer reading of M <= log2(n) - 2).
    On firing, C_2 is computed exhaustively and an agreeing shift pair
    d_1 < d_2 <= 2**M with s[i+d_1] = s[i+d_2] on the whole overlap is
    located; such a pair exists by pigeonhole on the 2**M + 1 windows of
    length M starting at 0..2**M.
    """
    if n is None:
        n = seq.n
    m = max_order_complexity(seq, n)
    inputs = {"N": n, "M": m}
    if (1 << (m + 2)) > n:
        return BoundReport("moc-half-peak", inputs, None, False,
                           f"not fired: 2^(M+2) = {1 << (m + 2)} > {n}")
    r = aperiodic_measure(seq, 2, n, budget=budget)
    inputs["C2"] = r.value
    pair = _agreeing_pair(seq.data & mask(n), n, m)
    held = 2 * r.value >= n
    note = f"C_2 = {r.value}, need >= {n}/2: {'holds' if held else 'VIOLATED'}"
    if pair is not None:
        d1, d2 = pair
        inputs["witness"] = [d1, d2]
        note += f"; windows at {d1} and {d2} agree on all {n - d2} overlapping bits"
        if d2 == 1 << m:
            note += " (pair sits at 2^M exactly, not strictly below)"
    return BoundReport("moc-half-peak", inputs, r.value, True, note)


def _agreeing_pair(data: int, n: int, m: int) -> tuple[int, int] | None:
    for d2 in range(1, (1 << m) + 1):
        tail = mask(n - d2)
        shifted = data >> d2
        for d1 in range(d2):
            if ((data >> d1) ^ shifted) & tail == 0:
                return d1, d2
    return None


# Table of sequence families: validity predicate, dimension formula, and the
# claimed order cap for a full periodic peak.  Claims for 5-term-trace and
# welch-gong disagree with the exact threshold; see README.
@dataclass(frozen=True)
class FamilyRow:
    key: str
    valid: object  # ell -> bool
    dimension: object  # ell -> int
    claimed: object  # ell -> int | float


TABLE_FAMILIES: tuple[FamilyRow, ...] = (
    FamilyRow("m-sequence", lambda e: e >= 2, lambda e: e, lambda e: 3),
    FamilyRow("small-kasami", lambda e: e >= 4 and e % 2 == 0, lambda e: 3 * e // 2, lambda e: 5),
    FamilyRow("gold", lambda e: e >= 3 and e % 4 != 0, lambda e: 2 * e, lambda e: 7),
    FamilyRow("large-kasami", lambda e: e >= 4 and e % 2 == 0, lambda e: 5 * e // 2, lambda e: 9),
    FamilyRow("3-term-trace", lambda e: e >= 5 and e % 2 == 1, lambda e: 3 * e, lambda e: 9),
    FamilyRow("5-term-trace", lambda e: e >= 5 and e % 2 == 1, lambda e: 5 * e, lambda e: 11),
    FamilyRow("welch-gong", lambda e: e >= 6 and e % 3 == 0, lambda e: (1 << (e // 3)) + 1,
              lambda e: ((1 << (e // 3)) + 1) / e),
)


def table1_row(family: str, ell: int) -> dict:
    """One family/degree cell: period, dimension, exact threshold, claimed cap."""
    row = next((f for f in TABLE_FAMILIES if f.key == family), None)
    if row is None:
        raise ValueError(f"unknown family {family!r}")
    if not row.valid(ell):
        raise ValueError(f"ell={ell} is not valid for family {family!r}")
    t = (1 << ell) - 1
    l = row.dimension(ell)
    threshold = full_peak_threshold(t, l)
    claimed = row.claimed(ell)
    return {
        "family": family,
        "ell": ell,
        "period": t,
        "dimension": l,
        "threshold": threshold,
        "claimed": claimed,
        "matches": threshold == claimed,
    }


def table1(ell_max: int = 20) -> list[dict]:
    out = []
    for row in TABLE_FAMILIES:
        for ell in range(2, ell_max + 1):
            if row.valid(ell):
                out.append(table1_row(row.key, ell))
    return out


def hall_complexity_bound(t: int, eps: float, delta: float = 0.0) -> BoundReport:
    """Numeric chain for the sextic-residue complexity bound.

    With N = ceil(2 T^(1/2+eps) (log2 T)^2), finds the largest k within
    the cap eps*log2(T)/8 for which (14/3)^k * k * sqrt(T) * log2(T)
    stays below N/2, then reports the resulting order-(k+1) bound.
    """
    if t % 6 != 1:
        raise ValueError(f"period must be 1 mod 6, got {t}")
    if eps <= 0:
        raise ValueError("eps must be positive")
    log_t = math.log2(t)
    n = math.ceil(2 * t ** (0.5 + eps) * log_t**2)
    k_cap = math.floor(eps * log_t / 8)
    k_best = 0
    for k in range(1, max(k_cap, 0) + 1):
        if (14 / 3) ** k * k * math.sqrt(t) * log_t < n / 2:
            k_best = k
    inputs = {"T": t, "eps": eps, "N": n, "k_cap": k_cap, "k_verified": k_best}
    if k_best < 1 or (k_best + 1) ** 2 >= n:
        return BoundReport("hall-complexity-bound", inputs, None, False,
                           "no order passes the correlation-ceiling chain at this size")
    value = log_complexity_bound(k_best + 1, n, delta)
    return BoundReport("hall-complexity-bound", inputs, value, True,
                       f"C_k < N/2 verified numerically for k <= {k_best}")


def fermat_complexity_bound(p: int, eps: float, delta: float = 0.0) -> BoundReport:
    """Numeric chain for the quotient-threshold complexity bound, order cap 3."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    log_p = math.log2(p)
    n = math.ceil(2 * p ** (1 + eps) * log_p**3)
    ceiling = p * log_p**3
    ok = ceiling < n / 2
    inputs = {"p": p, "eps": eps, "N": n, "C2_ceiling": ceiling}
    if not ok or 9 >= n:
        return BoundReport("fermat-complexity-bound", inputs, None, False,
                           "correlation ceiling does not clear N/2")
    value = log_complexity_bound(3, n, delta)
    return BoundReport("fermat-complexity-bound", inputs, value, True,
                       "order-2 ceiling clears N/2; order cap K = 3")


def kerror_bound(
    seq: BitSequence,
    n: int | None = None,
    k: int = 2,
    flips: int = 0,
    budget: int = DEFAULT_BUDGET,
) -> BoundReport:
    """Lower bound on the linear complexity surviving up to `flips` bit changes.

    Exhaustive C_j for j = 1..k, each inflated by the certified flip
    ceiling 2jF, then the self-consistent scan runs on the inflated map.
    The result holds for every sequence within Hamming distance F of the
    prefix.
    """
    if n is None:
        n = seq.n
    if k < 1:
        raise ValueError("k must be >= 1")
    corr = {}
    inflated = {}
    for j in range(1, k + 1):
        corr[j] = aperiodic_measure(seq, j, n, budget=budget).value
        inflated[j] = min(corr[j] + delta_under_flips(j, flips), n - j + 1)
    base = lc_correlation_bound(corr, n)
    worst = lc_correlation_bound(inflated, n)
    inputs = {"N": n, "k": k, "flips": flips, "corr": corr, "inflated": inflated}
    notes = [
        f"unperturbed scan bound {base.value}",
        f"surviving bound {worst.value} for every sequence within {flips} flips",
    ]
    if all(2 * v < n for v in inflated.values()) and (k + 1) ** 2 < n:
        logb = log_complexity_bound(k + 1, n)
        notes.append(f"inflated map stays below N/2; order-{k + 1} log bound {logb:.3f}")
    return BoundReport("kerror-lc", inputs, worst.value, worst.fired, "; ".join(notes))
