"""Exact two-terminal reliability polynomials, failure-time moments and
asymptotic expansions for recursive network families."""

from ._relnet import (
    RelnetError,
    asymptotic_mttf,
    brute_force_coeffs,
    classify,
    cumulants,
    cv_limit,
    expansion_terms,
    fan_limit_moment,
    graph_info,
    kn_cumulant,
    mc_moments,
    mgf,
    moment,
    nonexp_moment,
    reliability_at,
    reliability_coeffs,
    signature,
    signature_from_sizes,
    weibull_equivalent,
)

__all__ = [
    "RelnetError",
    "asymptotic_mttf",
    "brute_force_coeffs",
    "classify",
    "cumulants",
    "cv_limit",
    "expansion_terms",
    "fan_limit_moment",
    "graph_info",
    "kn_cumulant",
    "mc_moments",
    "mgf",
    "moment",
    "nonexp_moment",
    "reliability_at",
    "reliability_coeffs",
    "signature",
    "signature_from_sizes",
    "weibull_equivalent",
]
