"""Floor-quotient set toolkit.

S(X) = {X // n for n in range(1, X + 1)} for a positive integer X.  The
extension module computes |S(X)| in O(1) by closed form, enumerates the
constant-quotient blocks in O(sqrt(X)), restricts the set by divisibility,
evaluates the sawtooth-sum ledger behind the cardinality analysis, and
classifies elements as unit/prime/semiprime/other.
"""

from floorset._core import (  # noqa: F401
    MAX_X,
    DEFAULT_ORACLE_CAP,
    BlockStream,
    ClassificationReport,
    DecompositionReport,
    DivisibilityReport,
    DivisorSumReport,
    FloorSetSummary,
    PsiLedger,
    QuotientBlock,
    ValueClass,
    __version__,
    block_count,
    blocks,
    brute_force_set,
    build_ledger,
    cardinality_closed,
    checked_mul,
    classify_set,
    classify_value,
    collect_blocks,
    decompose,
    divisibility_report,
    divisor_summatory,
    floor_b,
    is_prime,
    isqrt,
    lemma_double_sum,
    psi,
    s1_term_sum,
    sd_brute,
    sd_cardinality,
    summarize,
    tau_oracle,
    trivial_bounds,
)
