#include "relnet/asymptotics.hpp"

#include "relnet/errors.hpp"
#include "relnet/quadrature.hpp"
#include "relnet/specfun.hpp"

#include <algorithm>
#include <cmath>

namespace relnet {

namespace {

Series to_kind_series(const Poly& p, SignatureKind kind, int order) {
    if (p.var() != Var::P) throw VarMismatchError("eigen data polynomials must be in p");
    if (kind == SignatureKind::SeriesLike) return poly_one_minus_series(p, Var::Q, order);
    return Series::from_poly(p, order);
}

struct EigenSeries {
    Series zeta;
    Series alpha;
};

EigenSeries eigen_series(const EigenData& ed, SignatureKind kind, int order) {
    if (const auto* ex = std::get_if<ExplicitEigen>(&ed)) {
        if (ex->on_unavailability != (kind == SignatureKind::ParallelLike))
            throw UnsupportedError("eigen data tracks the other regime's sequence");
        Series zeta = to_kind_series(ex->zeta, kind, order);
        if (zeta.coeff(0) != 1)
            throw DegenerateRootError("dominant eigenvalue does not reach 1 at the endpoint");
        return {zeta, to_kind_series(ex->alpha, kind, order)};
    }
    if (const auto* te = std::get_if<TwoEigen>(&ed)) {
        if (te->on_unavailability != (kind == SignatureKind::ParallelLike))
            throw UnsupportedError("eigen data tracks the other regime's sequence");
        Series trace = to_kind_series(te->trace, kind, order);
        Series det = to_kind_series(te->det, kind, order);
        Series zeta = solve_series_root({det, -trace, Series::one(trace.var(), order)}, order);
        // x_n = alpha+ zeta+^n + alpha- zeta-^n with zeta- = trace - zeta+:
        // alpha+ = (x1 - (trace - zeta+) x0) / (2 zeta+ - trace)
        Series x0 = to_kind_series(te->x0, kind, order);
        Series x1 = to_kind_series(te->x1, kind, order);
        Series alpha = (x1 - (trace - zeta) * x0).div(zeta * Rational(2) - trace);
        return {zeta, alpha};
    }
    if (const auto* dr = std::get_if<DenominatorRoot>(&ed)) {
        // zeta+ obeys D2 = 0 at z = 1/zeta+: solve W = zeta^d D2(1/zeta).
        const int d2_deg = static_cast<int>(dr->den2.size()) - 1;
        std::vector<Series> w;
        w.reserve(dr->den2.size());
        for (int j = 0; j <= d2_deg; ++j)
            w.push_back(to_kind_series(dr->den2[static_cast<size_t>(d2_deg - j)], kind, order));
        Series zeta = solve_series_root(w, order);
        Series zinv = Series::one(zeta.var(), order).div(zeta);

        auto eval_at_zinv = [&](const std::vector<Poly>& zpoly) {
            std::vector<Series> cs;
            cs.reserve(zpoly.size());
            for (const Poly& c : zpoly) cs.push_back(to_kind_series(c, kind, order));
            return eval_poly_in_zeta(cs, zinv);
        };
        // residue of G at z = 1/zeta+: alpha+ = -zeta+ N(1/zeta+) / D'_z(1/zeta+)
        std::vector<Poly> den = dr->full_denominator();
        std::vector<Poly> den_prime;
        for (size_t j = 1; j < den.size(); ++j)
            den_prime.push_back(den[j] * Rational(static_cast<long>(j)));
        Series alpha = (-(zeta * eval_at_zinv(dr->numer))).div(eval_at_zinv(den_prime));
        return {zeta, alpha};
    }
    throw DegenerateRootError(
        "repeated dominant eigenvalue with an n-linear amplitude has no cut signature");
}

CutSignature signature_from_series(const Series& minus_log_zeta, const Series& alpha,
                                   SignatureKind kind) {
    const int v = minus_log_zeta.valuation();
    if (v < 1)
        throw DegenerateRootError("-ln zeta+ vanishes identically to this order");
    if (alpha.coeff(0) != 1)
        throw DegenerateRootError("amplitude alpha+ does not reach 1 at the endpoint");
    CutSignature sig;
    sig.kind = kind;
    sig.i = v;
    for (int k = v; k <= minus_log_zeta.order(); ++k) sig.head[k] = minus_log_zeta.coeff(k);
    for (int k = 1; k <= alpha.order(); ++k) sig.amp[k] = alpha.coeff(k);
    return sig;
}

}  // namespace

const Rational& CutSignature::head_at(int order) const {
    auto it = head.find(order);
    if (it == head.end())
        throw MissingCoefficientError("signature lacks the order-" + std::to_string(order) +
                                      " eigenvalue coefficient");
    return it->second;
}

const Rational& CutSignature::amp_at(int order) const {
    auto it = amp.find(order);
    if (it == amp.end())
        throw MissingCoefficientError("signature lacks the order-" + std::to_string(order) +
                                      " amplitude coefficient");
    return it->second;
}

CutSignature signature_from_eigen(const EigenData& ed, SignatureKind kind, int order) {
    EigenSeries es = eigen_series(ed, kind, order);
    return signature_from_series(-es.zeta.log(), es.alpha, kind);
}

CutSignature signature_from_polynomials(const std::vector<std::pair<int, Poly>>& polys,
                                        SignatureKind kind, int order) {
    if (polys.size() < 2)
        throw UnsupportedError("signature extraction needs at least two sizes");
    std::vector<std::pair<int, Series>> logs;
    logs.reserve(polys.size());
    for (const auto& [n, poly] : polys) {
        Series x = kind == SignatureKind::SeriesLike
                       ? poly_one_minus_series(poly, Var::Q, order)
                       : Series::from_poly(Poly::constant(Var::P, 1) - poly, order);
        if (x.coeff(0) != 1)
            throw UnsupportedError("polynomial for n = " + std::to_string(n) +
                                   " does not reach the endpoint value 1");
        logs.emplace_back(n, x.log());
    }
    std::sort(logs.begin(), logs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    const auto& [n1, l1] = logs[0];
    const auto& [n2, l2] = logs[1];
    if (n1 == n2) throw UnsupportedError("signature extraction needs distinct sizes");
    Series log_zeta = (l2 - l1) * Rational(1, n2 - n1);
    Series log_alpha = l1 - log_zeta * Rational(n1);
    for (size_t j = 2; j < logs.size(); ++j) {
        Series predicted = log_alpha + log_zeta * Rational(logs[j].first);
        if (!(predicted == logs[j].second))
            throw InconsistentSizesError("size n = " + std::to_string(logs[j].first) +
                                         " disagrees with the two-size extraction");
    }
    return signature_from_series(-log_zeta, log_alpha.exp(), kind);
}

// ---- expansions -------------------------------------------------------------

double AsymptoticExpansion::eval(double n) const {
    double acc = log_coeff * std::log(n) + const_coeff;
    for (const auto& t : terms) acc += t.coeff * std::pow(n, -to_double(t.exponent));
    return acc;
}

double AsymptoticExpansion::eval_terms(double n, int count) const {
    double acc = log_coeff * std::log(n) + const_coeff;
    int used = 0;
    for (const auto& t : terms) {
        if (used >= count) break;
        if (t.coeff == 0.0 && t.prefactor == 0) continue;
        acc += t.coeff * std::pow(n, -to_double(t.exponent));
        ++used;
    }
    return acc;
}

AsymptoticExpansion moment_expansion_series_like(const CutSignature& sig, int m,
                                                 int max_eta_order) {
    if (sig.kind != SignatureKind::SeriesLike)
        throw UnsupportedError("series-like expansion requires a series-like signature");
    if (m < 1) throw UnsupportedError("moment order must be >= 1");
    if (max_eta_order < 0 || max_eta_order > 2)
        throw UnsupportedError("the eta expansion is carried to eta^2 at most");

    const int i = sig.i;
    const Rational& ai = sig.head_at(i);
    AsymptoticExpansion out;

    auto push = [&](int j, const Rational& pre, const Rational& gamma_arg) {
        ExpansionTerm t;
        t.exponent = Rational(m + j, i);
        t.prefactor = pre;
        t.gamma_arg = gamma_arg;
        double alpha_scale = std::pow(to_double(ai), -to_double(t.exponent));
        t.coeff = to_double(pre) * gamma_fn(gamma_arg) * alpha_scale;
        out.terms.push_back(std::move(t));
    };

    push(0, Rational(1), Rational(i + m, i));
    if (max_eta_order >= 1) {
        const Rational r1 = sig.head_at(i + 1) / ai;
        const Rational ap1 = sig.amp_at(1);
        const Rational x(1 + m, i);
        Rational pre = Rational(m, i) * (Rational(1 + m, 2) + ap1 - r1 * x);
        push(1, pre, x);
    }
    if (max_eta_order >= 2) {
        const Rational r1 = sig.head_at(i + 1) / ai;
        const Rational r2 = sig.head_at(i + 2) / ai;
        const Rational ap1 = sig.amp_at(1);
        const Rational ap2 = sig.amp_at(2);
        const Rational y(2 + m, i);
        Rational c_a = Rational(10 + 11 * m + 3 * m * m, 24) + Rational(1 + m, 2) * ap1 + ap2;
        Rational c_b = r2 + r1 * (Rational(1 + m, 2) + ap1);
        Rational c_c = r1 * r1 / Rational(2);
        Rational pre = Rational(m, i) * (c_a - c_b * y + c_c * y * (Rational(1) + y));
        push(2, pre, y);
    }
    return out;
}

AsymptoticExpansion mttf_expansion_parallel_like(const CutSignature& sig) {
    if (sig.kind != SignatureKind::ParallelLike)
        throw UnsupportedError("parallel-like expansion requires a parallel-like signature");
    const int i = sig.i;
    const Rational& bi = sig.head_at(i);
    const Rational& bi1 = sig.head_at(i + 1);
    const Rational& bp1 = sig.amp_at(1);

    AsymptoticExpansion out;
    out.log_coeff_exact = Rational(1, i);
    out.log_coeff = 1.0 / i;
    out.const_coeff = (std::log(to_double(bi)) + euler_gamma_const) / i;

    ExpansionTerm t;
    t.exponent = Rational(1, i);
    t.prefactor = bi1 / (Rational(i) * bi) - bp1;
    t.gamma_arg = Rational(i + 1, i);
    t.coeff = to_double(t.prefactor) * gamma_fn(t.gamma_arg) *
              std::pow(to_double(bi), -1.0 / i);
    out.terms.push_back(std::move(t));
    return out;
}

double parallel_like_mttf_value(const CutSignature& sig, long n, ParallelMode mode) {
    if (sig.kind != SignatureKind::ParallelLike)
        throw UnsupportedError("parallel-like value requires a parallel-like signature");
    if (mode == ParallelMode::Asymptotic)
        return mttf_expansion_parallel_like(sig).eval(static_cast<double>(n));

    const int i = sig.i;
    const double bi = to_double(sig.head_at(i));
    const double bi1 = to_double(sig.head_at(i + 1));
    const double bp1 = to_double(sig.amp_at(1));
    const long cut = std::lround(bi * static_cast<double>(n));
    double a = harmonic(cut) / i;
    double b;
    if (i == 1) {
        b = (bi1 - bi / 2) / (bi * bi) / static_cast<double>(n);
    } else {
        b = bi1 / i * gamma_fn(Rational(i + 1, i)) * std::pow(bi, -1.0 - 1.0 / i) *
            std::pow(static_cast<double>(n), -1.0 / i);
    }
    double c = -bp1 * gamma_fn(Rational(i + 1, i)) * std::pow(static_cast<double>(n) * bi, -1.0 / i);
    return a + b + c;
}

double coefficient_of_variation_limit(int i) {
    if (i < 1) throw UnsupportedError("cut order must be >= 1");
    double g2 = gamma_fn(1.0 + 2.0 / i);
    double g1 = gamma_fn(1.0 + 1.0 / i);
    return std::sqrt(g2 / (g1 * g1) - 1.0);
}

double coefficient_of_variation_limit(const CutSignature& sig) {
    if (sig.kind != SignatureKind::SeriesLike)
        throw UnsupportedError("the limiting coefficient of variation applies to series-like families");
    return coefficient_of_variation_limit(sig.i);
}

double WeibullEquivalent::reliability(double n, double lambda_t) const {
    double arg = to_double(a_i) * std::pow(lambda_t, i);
    if (order >= 1) arg += to_double(a_ip1) * std::pow(lambda_t, i + 1);
    return std::exp(-n * arg);
}

double WeibullEquivalent::moment(double n, int m) const {
    auto survival = [&](double x) {
        return (m > 1 ? std::pow(x, m - 1) : 1.0) * reliability(n, x);
    };
    // R decays like exp(-n a_i x^i); pick a cutoff far beyond the knee
    double scale = std::pow(n * to_double(a_i), -1.0 / i);
    double cutoff = scale * std::pow(200.0, 1.0 / i) + 1.0;
    return m * integrate(survival, 0.0, cutoff, 1e-12);
}

WeibullEquivalent weibull_equivalent(const CutSignature& sig, int order) {
    if (sig.kind != SignatureKind::SeriesLike)
        throw UnsupportedError("weibull equivalents apply to series-like families");
    if (order != 0 && order != 1) throw UnsupportedError("order must be 0 or 1");
    WeibullEquivalent w;
    w.i = sig.i;
    w.a_i = sig.head_at(sig.i);
    w.order = order;
    if (order == 1) {
        if (sig.amp_at(1) != 0)
            throw NonzeroFirstCutError(
                "alpha'_1 != 0: factor out the order-one cut before using the order-1 surrogate");
        w.a_ip1 = sig.head_at(sig.i + 1) - Rational(sig.i) * w.a_i / Rational(2);
    }
    return w;
}

NonexpAsymptotic nonexp_asymptotic_moment(const CutSignature& sig, const PowerLawHazard& model,
                                          int m, double n) {
    if (sig.kind != SignatureKind::SeriesLike)
        throw UnsupportedError("non-exponential asymptotics apply to series-like families");
    if (model.beta <= -1.0) throw UnsupportedError("power-law hazard requires beta > -1");
    NonexpAsymptotic out;
    out.exponent = (model.beta + 1.0) * m / sig.i;
    double scale = std::pow(model.a_beta / (model.beta + 1.0), m);
    out.value = scale * gamma_fn(1.0 + out.exponent) *
                std::pow(n * to_double(sig.head_at(sig.i)), -out.exponent);
    return out;
}

AsymptoticExpansion reference_mttf_expansion(Family family) {
    switch (family) {
        case Family::Series: {
            AsymptoticExpansion out;
            out.terms.push_back({Rational(1), Rational(1), Rational(1), 1.0});
            return out;
        }
        case Family::Parallel: {
            CutSignature sig =
                signature_from_eigen(eigen_data({family, 4}), SignatureKind::ParallelLike, 8);
            return mttf_expansion_parallel_like(sig);
        }
        case Family::K4Ladder: {
            CutSignature sig =
                signature_from_eigen(eigen_data({family, 1}), SignatureKind::SeriesLike, 8);
            AsymptoticExpansion out = moment_expansion_series_like(sig, 1, 2);
            out.terms.push_back({Rational(1), Rational(-3, 4), Rational(1), -0.75});
            return out;
        }
        case Family::Street3xN: {
            CutSignature sig =
                signature_from_eigen(eigen_data({family, 1}), SignatureKind::SeriesLike, 8);
            return moment_expansion_series_like(sig, 1, 2);
        }
        case Family::DoubleFan: {
            CutSignature sig =
                signature_from_eigen(eigen_data({family, 1}), SignatureKind::ParallelLike, 8);
            AsymptoticExpansion out = mttf_expansion_parallel_like(sig);
            out.terms.push_back({Rational(1), Rational(-11, 4), Rational(1), -2.75});
            return out;
        }
        case Family::GeneralizedFan: {
            AsymptoticExpansion out;
            out.const_coeff = fan_limit_moment(1, 1.0, FanLimitMethod::ClosedForm).value;
            return out;
        }
        case Family::KOutOfN:
            throw UnsupportedError("no reference expansion for kofn");
    }
    throw UnsupportedError("unhandled family");
}

}  // namespace relnet
