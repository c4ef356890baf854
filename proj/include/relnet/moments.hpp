#pragma once

#include "relnet/poly.hpp"

#include <functional>
#include <optional>
#include <variant>

namespace relnet {

// ---- component failure models ----------------------------------------------

struct Exponential {
    double lambda = 1.0;  // failure rate, 1/time
};

/// Component model given through the inverse lifetime map t = chi(p) with
/// -chi'(p) -> a_beta (1-p)^beta near p = 1. chi/neg_chi_prime provide the
/// full inverse for quadrature when available.
struct PowerLawHazard {
    double beta = 0.0;
    double a_beta = 1.0;
    std::function<double(double)> chi;
    std::function<double(double)> neg_chi_prime;
};

using FailureModel = std::variant<Exponential, PowerLawHazard>;

/// Weibull component p(t) = exp(-(lambda t)^kappa) as a PowerLawHazard:
/// beta = 1/kappa - 1, a_beta = 1/(kappa lambda).
FailureModel weibull_model(double lambda, double kappa);

/// Lifetime transform t = chi(p) of the model (p uniform -> lifetime draw).
double model_chi(const FailureModel& model, double p);

// ---- moments ----------------------------------------------------------------

struct MomentResult {
    int order = 1;
    std::optional<Rational> exact;  // lambda^m <t^m> when exactly computable
    double value = 0.0;             // <t^m> in time^m units
};

/// Dimensionless lambda^m <t^m> = m! sum_k c_k / k^m for R = sum c_k p^k.
/// Throws DivergentMomentError when R(0) != 0.
Rational exact_moment_scaled(const Poly& reliability, int m);

MomentResult exact_moment(const Poly& reliability, int m, double lambda);

/// kappa_1..kappa_M from contiguous raw moments mu_1..mu_M (exact).
std::vector<Rational> cumulants_from_moments(const std::vector<Rational>& mu);

/// lambda^m kappa_m = (m-1)! sum_{i=k}^{n} i^-m for the k-out-of-n system.
Rational kn_cumulant_scaled(int k, int n, int m);

/// <e^{z t}> = 1 + (z/lambda) sum_k c_k / (k - z/lambda); requires
/// z/lambda below the smallest exponent with a nonzero coefficient.
double mgf_value(const Poly& reliability, double z, double lambda);

enum class FanLimitMethod { Quadrature, ClosedForm };

/// Limiting generalized-fan moment lambda^m <t^m>_inf (value field holds
/// <t^m> scaled by the given lambda).
MomentResult fan_limit_moment(int m, double lambda, FanLimitMethod method);

/// m int_0^1 chi^(m-1)(p) R(p) (-chi'(p)) dp by adaptive quadrature; the
/// model must carry its full inverse map.
MomentResult nonexp_moment(const Poly& reliability, const FailureModel& model, int m);

}  // namespace relnet
