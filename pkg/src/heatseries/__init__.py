"""Truncated heat-kernel derivative series: evaluation, rigorous error
bounds, divergence certificates, the eigenfunction expansion in similarity
variables, and the distributional remainder decomposition."""

from .backend import BACKEND_NAME
from .bounds import (
    BoundReport,
    bonan_clark_bound,
    bonan_clark_log,
    bound_report,
    divergence_lower_bound,
    envelope_bound_G,
    error_bound_F,
    fit_divergence_prefactor,
)
from .decomposition import (
    RemainderFunction,
    TestFunction,
    decomposition_residual,
    gaussian_test_function,
    poly_gaussian_test_function,
    remainder,
    remainder_l1_norm,
)
from .eigen import (
    EigenCoeffs,
    SimilarityPoint,
    eigen_coeffs,
    eval_expansion,
    from_similarity,
    is_within_validity,
    to_similarity,
    validity_integral,
)
from .errors import (
    DomainError,
    HeatSeriesError,
    IntegrabilityError,
    UnsupportedVariantError,
)
from .kernel_approx import (
    ApproxConfig,
    ApproxResult,
    SeriesGridEvaluator,
    eval_uk,
    eval_uk_radial_origin,
    heat_kernel,
    kernel_derivative,
)
from .moments import (
    Gaussian,
    Generic1D,
    MomentTable,
    MultiIndex,
    Radial,
    abs_moment,
    build_moment_table,
    compositions,
    constant_C,
    gaussian_abs_moment,
    gaussian_moment,
    moments_at_time,
    multi_indices_of_degree,
    multi_indices_up_to,
    radial_abs_moment,
    radial_moment,
)
from .reference import (
    CSV_HEADER,
    ErrorCurve,
    ErrorPoint,
    GridSpec,
    convolve_oracle,
    default_grid,
    error_curve,
    exact_gaussian_solution,
    sup_error,
)
from .signedlog import ONE, ZERO, SignedLog, aligned_sum
from .specfun import (
    hermite,
    hermite_weighted,
    hermite_weighted_sequence,
    laguerre,
    log_factorial,
    log_gamma,
)

__version__ = "0.1.0"

__all__ = [
    "ApproxConfig",
    "ApproxResult",
    "BACKEND_NAME",
    "BoundReport",
    "CSV_HEADER",
    "DomainError",
    "EigenCoeffs",
    "ErrorCurve",
    "ErrorPoint",
    "Gaussian",
    "Generic1D",
    "GridSpec",
    "HeatSeriesError",
    "IntegrabilityError",
    "MomentTable",
    "MultiIndex",
    "ONE",
    "Radial",
    "RemainderFunction",
    "SeriesGridEvaluator",
    "SignedLog",
    "SimilarityPoint",
    "TestFunction",
    "UnsupportedVariantError",
    "ZERO",
    "abs_moment",
    "aligned_sum",
    "bonan_clark_bound",
    "bonan_clark_log",
    "bound_report",
    "build_moment_table",
    "compositions",
    "constant_C",
    "convolve_oracle",
    "decomposition_residual",
    "default_grid",
    "divergence_lower_bound",
    "eigen_coeffs",
    "envelope_bound_G",
    "error_bound_F",
    "error_curve",
    "eval_expansion",
    "eval_uk",
    "eval_uk_radial_origin",
    "exact_gaussian_solution",
    "fit_divergence_prefactor",
    "from_similarity",
    "gaussian_abs_moment",
    "gaussian_moment",
    "gaussian_test_function",
    "heat_kernel",
    "hermite",
    "hermite_weighted",
    "hermite_weighted_sequence",
    "is_within_validity",
    "kernel_derivative",
    "laguerre",
    "log_factorial",
    "log_gamma",
    "moments_at_time",
    "multi_indices_of_degree",
    "multi_indices_up_to",
    "poly_gaussian_test_function",
    "radial_abs_moment",
    "radial_moment",
    "remainder",
    "remainder_l1_norm",
    "sup_error",
    "to_similarity",
    "validity_integral",
]
