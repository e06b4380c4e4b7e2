"""Zero-sum blocks and zero-sum arithmetic subsequences in {-r,s}-sequences:
exact thresholds, extremal constructions, scanners, good shifts, and an
exhaustive oracle."""

__version__ = "0.1.0"

from .core import (
    BudgetExceededError,
    ConstructionInfeasibleError,
    FormulaDomainError,
    ParameterError,
    Params,
    ResidueProfile,
    ShiftSearchError,
    SignSeq,
    WeightRange,
    residue_profile,
    weight,
    weight_range,
)
from .formulas import (
    BoundReport,
    SufficientBound,
    ap_lower_bound_value,
    exact_block_threshold,
    exact_block_threshold_symmetric,
    pm1_block_threshold,
    pm1_smallsum_threshold,
    sufficient_block_bound,
)
from .constructions import (
    ClaimedProperty,
    Construction,
    ResidueFunction,
    build_ap_good_shift,
    build_ap_mod_k,
    build_ap_mod_k_plus1,
    build_ap_mod_k_product,
    build_ap_two_p,
    build_block_extremal,
    build_block_extremal_negated,
)
from .scanners import (
    InterpolationReport,
    ScanReport,
    ap_scan,
    ap_scan_naive,
    block_scan,
    interpolation_check,
    smallsum_block_scan,
)
from .good_shift import (
    GoodShift,
    is_good_shift,
    is_prime,
    min_good_shift,
    prime_factors,
    prime_shift,
)
from .oracle import (
    Pow2Verdict,
    ResidueLemmaVerdict,
    ThresholdResult,
    TwoKVerdict,
    estimate_window_evaluations,
    exact_threshold,
    verify_2k_proposition,
    verify_lemma_residue_properties,
    verify_pow2_rigidity,
)
from .seqfile import (
    SequenceFileError,
    format_sequence,
    parse_sequence,
    read_sequence,
    write_sequence,
)

__all__ = [
    "__version__",
    "BudgetExceededError",
    "ConstructionInfeasibleError",
    "FormulaDomainError",
    "ParameterError",
    "Params",
    "ResidueProfile",
    "ShiftSearchError",
    "SignSeq",
    "WeightRange",
    "residue_profile",
    "weight",
    "weight_range",
    "BoundReport",
    "SufficientBound",
    "ap_lower_bound_value",
    "exact_block_threshold",
    "exact_block_threshold_symmetric",
    "pm1_block_threshold",
    "pm1_smallsum_threshold",
    "sufficient_block_bound",
    "ClaimedProperty",
    "Construction",
    "ResidueFunction",
    "build_ap_good_shift",
    "build_ap_mod_k",
    "build_ap_mod_k_plus1",
    "build_ap_mod_k_product",
    "build_ap_two_p",
    "build_block_extremal",
    "build_block_extremal_negated",
    "InterpolationReport",
    "ScanReport",
    "ap_scan",
    "ap_scan_naive",
    "block_scan",
    "interpolation_check",
    "smallsum_block_scan",
    "GoodShift",
    "is_good_shift",
    "is_prime",
    "min_good_shift",
    "prime_factors",
    "prime_shift",
    "Pow2Verdict",
    "ResidueLemmaVerdict",
    "ThresholdResult",
    "TwoKVerdict",
    "estimate_window_evaluations",
    "exact_threshold",
    "verify_2k_proposition",
    "verify_lemma_residue_properties",
    "verify_pow2_rigidity",
    "SequenceFileError",
    "format_sequence",
    "parse_sequence",
    "read_sequence",
    "write_sequence",
]
