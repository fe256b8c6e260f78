"""Entropy-method tail bound toolkit.

Exact entropy functionals on finite product probability spaces, the
coordinate perturbation oracles and their sub-Gaussian tail bounds, bounded
random matrix ensembles, and reproducible Monte Carlo tail verification.
"""

from ._core import (
    CenterEstimate,
    Centering,
    ColumnDeltaReport,
    ColumnDeltaRow,
    ColumnDeltaViolation,
    CompareResult,
    CoordinateSpace,
    DeltaReport,
    EnsembleKind,
    EntryDistribution,
    FunctionTable,
    MatrixSample,
    MatrixShape,
    PerturbationChoice,
    ProductSpace,
    SeedTag,
    SimulationConfig,
    Spectrum,
    SpectrumScaling,
    TailReport,
    TailRow,
    TailSide,
    clopper_pearson,
    column_delta_check,
    column_perturbation_extreme,
    compare_report,
    covariance_spectrum,
    delta_squared,
    duality_value,
    entropy,
    estimate_center,
    herbst_mgf_check,
    log_sobolev_gap,
    maurer_eig_bounds,
    mp_cdf,
    mp_density,
    mp_distance,
    mp_support,
    partial_entropy,
    perturbed_values,
    rademacher_columns,
    sample_hermitian,
    sample_rectangular,
    sample_symmetric,
    symmetric_spectrum,
    table_from_json,
    table_to_json,
    tail_bound,
    tail_estimate,
    tail_report_to_csv,
    tail_report_to_json,
    tensorization_gap,
    theoretical_bounds,
    variation_value,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
