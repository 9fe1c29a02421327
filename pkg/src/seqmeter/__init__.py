"""Pseudorandomness measures of binary sequences.

Exact, witness-producing implementations of the standard predictability
measures (linear complexity, maximum-order complexity, correlation
measures of order k), plus constructive search for the correlation
peaks that low complexity forces, and the threshold calculators that
tie the two together.
"""

__version__ = "0.1.0"

from .bitseq import BitSequence, ShiftSet, load, loads, save, dumps
from .bounds import (
    BoundReport,
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
from .codes import (
    CyclicSpan,
    PeakCertificate,
    build_span,
    find_periodic_peak,
    full_peak_threshold,
    hamming_condition,
)
from .complexity import (
    ComplexityProfile,
    kerror_linear_complexity,
    linear_complexity,
    linear_complexity_profile,
    max_order_complexity,
    max_order_complexity_profile,
)
from .correlation import (
    BudgetExceededError,
    CorrelationResult,
    aperiodic_measure,
    correlation_at,
    delta_under_flips,
    periodic_autocorrelation,
    periodic_measure,
    search_cost,
)
from .generators import (
    FermatSpec,
    HallSpec,
    LfsrSpec,
    NonPrimitiveTapsError,
    fermat_threshold,
    gold_sequence,
    hall_sextic,
    m_sequence,
    small_kasami,
)

__all__ = [name for name in dir() if not name.startswith("_")]
