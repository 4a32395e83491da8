"""Nonuniform Berry-Esseen bound C(t) for normalized i.i.d. sums."""

from ._core import (
    MIN_COORDINATE,
    NONUNIFORM_CONSTANT,
    UNIFORM_CONSTANT,
    BoundParams,
    DiscreteDistribution,
    InfeasibleCoordinate,
    center_quantities,
    check_feasibility,
    ci_bound,
    compute_bounds,
    evaluate_formulas,
    exact_convolution_cdf,
    gamma_budget,
    make_table,
    moment_envelope,
    normal_cdf_complement,
    optimize,
    param_ranges,
    psi_split,
    verify_bound,
)

__all__ = [
    "MIN_COORDINATE",
    "NONUNIFORM_CONSTANT",
    "UNIFORM_CONSTANT",
    "BoundParams",
    "DiscreteDistribution",
    "InfeasibleCoordinate",
    "center_quantities",
    "check_feasibility",
    "ci_bound",
    "compute_bounds",
    "evaluate_formulas",
    "exact_convolution_cdf",
    "gamma_budget",
    "make_table",
    "moment_envelope",
    "normal_cdf_complement",
    "optimize",
    "param_ranges",
    "psi_split",
    "verify_bound",
]
