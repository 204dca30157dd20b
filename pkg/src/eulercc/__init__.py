"""Certified counting, isolation and classification of collinear three-body
central configurations ("Euler configurations") for arbitrary real masses or
vorticities and any real force-law exponent, built on a certified root
engine for real-exponent power sums (signomials)."""

from .euler import (
    INFINITE,
    CellCount,
    ConfigurationSolution,
    MassTriple,
    abc_terms,
    cell_mass_view,
    celli_identity_residual,
    count_all,
    count_cell,
    degenerate_family,
    endpoint_sign_g,
    eval_g,
    eval_g_prime,
    eval_h,
    h_signomial,
)
from .classifier import (
    RegionClass,
    classify_E1,
    classify_E2,
    classify_total,
    frontier_curve_m2,
    grid_scan,
    grid_to_csv,
)
from .numerics import ToleranceError
from .qps import (
    AffineConstraint,
    BivariateSignomial,
    LineCount,
    count_on_line,
    euler_line_system,
    khovanskii_bound,
    restrict_to_line,
    straight_bound,
)
from .signomial import (
    IDENTICALLY_ZERO,
    Endpoint,
    RootRecord,
    Signomial,
    Term,
    count_and_isolate,
    derivative,
    derivative_chain,
    evaluate,
    limit_sign,
    normalize,
    shift_and_differentiate,
    sign_variations,
)

__all__ = [
    "INFINITE",
    "IDENTICALLY_ZERO",
    "AffineConstraint",
    "BivariateSignomial",
    "CellCount",
    "ConfigurationSolution",
    "Endpoint",
    "LineCount",
    "MassTriple",
    "RegionClass",
    "RootRecord",
    "Signomial",
    "Term",
    "ToleranceError",
    "abc_terms",
    "cell_mass_view",
    "celli_identity_residual",
    "classify_E1",
    "classify_E2",
    "classify_total",
    "count_all",
    "count_and_isolate",
    "count_cell",
    "count_on_line",
    "degenerate_family",
    "derivative",
    "derivative_chain",
    "endpoint_sign_g",
    "euler_line_system",
    "eval_g",
    "eval_g_prime",
    "eval_h",
    "evaluate",
    "frontier_curve_m2",
    "grid_scan",
    "grid_to_csv",
    "h_signomial",
    "khovanskii_bound",
    "limit_sign",
    "normalize",
    "restrict_to_line",
    "shift_and_differentiate",
    "sign_variations",
    "straight_bound",
]

__version__ = "0.1.0"
