"""Inconstancy of discrete curves and symbolic sequences."""

from ._core import (  # noqa: F401
    CurveMetrics,
    EntropyReport,
    FluctuationReport,
    McEstimate,
    __version__,
    asymptotic_inconstancy,
    code,
    convex_hull,
    empirical_entropy,
    empirical_frequencies,
    empirical_pn,
    estimate_crofton,
    estimate_crofton_xy,
    exact_block_frequencies,
    finite_binary_inconstancy,
    fixed_point,
    fluctuation_report,
    inconstancy,
    inconstancy_xy,
    intersect_count,
    max_entropy,
    named_constants,
    pair_morphism,
    paperfolding,
    periodic,
    periodic_inconstancy,
    perron_frequencies,
    predict_next,
    random_binary,
    rudin_shapiro,
    sequence_inconstancy,
    sturmian,
    sturmian_inconstancy,
    thue_morse,
    two_segment_inconstancy,
)
