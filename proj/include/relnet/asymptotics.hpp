#pragma once

#include "relnet/architectures.hpp"
#include "relnet/moments.hpp"
#include "relnet/series.hpp"

#include <map>
#include <vector>

namespace relnet {

enum class SignatureKind { SeriesLike, ParallelLike };

/// Leading expansion data of the dominant eigenvalue near the relevant
/// endpoint. For series-like families (variable q = 1-p):
///   -ln zeta+ = head[i] q^i + head[i+1] q^(i+1) + ...
///   alpha+    = 1 + amp[1] q + amp[2] q^2 + ...
/// Parallel-like uses the same layout in p (the beta coefficients).
/// i is the smallest cut order.
struct CutSignature {
    SignatureKind kind = SignatureKind::SeriesLike;
    int i = 1;
    std::map<int, Rational> head;
    std::map<int, Rational> amp;

    const Rational& head_at(int order) const;  // throws MissingCoefficientError
    const Rational& amp_at(int order) const;   // throws MissingCoefficientError
};

/// Build zeta+/alpha+ series from recursion data and extract the signature
/// to truncation order K. Throws DegenerateRootError when the dominant
/// eigenvalue is not a simple unit root at the endpoint (saturating
/// families such as the generalized fan).
CutSignature signature_from_eigen(const EigenData& ed, SignatureKind kind, int order);

/// Recover the signature from at least two exact polynomials by log
/// differencing: ln zeta+ = (ln X_{n2} - ln X_{n1})/(n2 - n1). Any extra
/// sizes are used as consistency witnesses (InconsistentSizesError).
CutSignature signature_from_polynomials(const std::vector<std::pair<int, Poly>>& polys,
                                        SignatureKind kind, int order);

// ---- asymptotic expansions ---------------------------------------------------

/// One power term coeff * n^-exponent. The exact pieces are kept alongside:
/// coeff = prefactor * Gamma(gamma_arg) * alpha_scale, where alpha_scale is
/// the (head coefficient)^-exponent factor of the eta substitution.
struct ExpansionTerm {
    Rational exponent;
    Rational prefactor;
    Rational gamma_arg;
    double coeff = 0.0;
};

struct AsymptoticExpansion {
    Rational log_coeff_exact{0};  // 1/i for parallel-like, 0 otherwise
    double log_coeff = 0.0;
    double const_coeff = 0.0;
    std::vector<ExpansionTerm> terms;  // strictly increasing exponents

    double eval(double n) const;
    /// log/const head plus the first `count` nonzero power terms.
    double eval_terms(double n, int count) const;
};

/// lambda^m <t^m>_n for series-like signatures: the eta-bracket expansion
/// with eta = (n alpha_i)^(-1/i), carried to eta^max_eta_order (<= 2).
/// Zero brackets are kept as explicit zero terms.
AsymptoticExpansion moment_expansion_series_like(const CutSignature& sig, int m,
                                                 int max_eta_order = 2);

/// Parallel-like MTTF head: (1/i)(ln(beta_i n) + C) plus the n^(-1/i) term
/// (beta_{i+1}/(i beta_i) - beta'_1) Gamma(1+1/i) / (n beta_i)^(1/i).
AsymptoticExpansion mttf_expansion_parallel_like(const CutSignature& sig);

enum class ParallelMode { Asymptotic, ExactHarmonic };

/// Numeric parallel-like MTTF at a given size. ExactHarmonic replaces the
/// logarithmic head by the exact harmonic sum (1/i) H_N with
/// N = round(beta_i n); an O(1/n)-accurate choice when beta_i n is not an
/// integer.
double parallel_like_mttf_value(const CutSignature& sig, long n, ParallelMode mode);

/// sigma/<t> -> sqrt(Gamma(1+2/i)/Gamma(1+1/i)^2 - 1), a function of i only.
double coefficient_of_variation_limit(int i);
double coefficient_of_variation_limit(const CutSignature& sig);

/// Weibull-equivalent surrogate reliability:
///   order 0: exp(-n a_i (lambda t)^i)
///   order 1: exp(-n (a_i (lambda t)^i + a_ip1 (lambda t)^(i+1)))
/// with a_i = alpha_i and a_ip1 = alpha_{i+1} - (i/2) alpha_i.
struct WeibullEquivalent {
    int i = 1;
    Rational a_i;
    Rational a_ip1;
    int order = 0;

    double reliability(double n, double lambda_t) const;
    /// lambda^m <t^m> of the surrogate by quadrature.
    double moment(double n, int m) const;
};

/// order 1 requires alpha'_1 = 0 (no cut of order one), else
/// NonzeroFirstCutError.
WeibullEquivalent weibull_equivalent(const CutSignature& sig, int order);

/// Leading-order moment of a series-like family under a power-law hazard
/// component: (a_beta/(beta+1))^m Gamma(1+(beta+1)m/i) / (n alpha_i)^e with
/// e = (beta+1) m / i; exponent reports e.
struct NonexpAsymptotic {
    double value = 0.0;
    double exponent = 0.0;
};

NonexpAsymptotic nonexp_asymptotic_moment(const CutSignature& sig, const PowerLawHazard& model,
                                          int m, double n);

/// Family-pinned MTTF comparison expansions (the forms used for the
/// exact-vs-asymptotic tables): engine output through eta^2 plus, where the
/// family has a known next coefficient beyond the general engine's order,
/// that pinned term (-3/(4n) for the K4 ladder, -11/(4n) for the double
/// fan). The generalized fan yields its constant n -> infinity MTTF.
AsymptoticExpansion reference_mttf_expansion(Family family);

}  // namespace relnet
