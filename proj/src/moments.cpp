#include "relnet/moments.hpp"

#include "relnet/errors.hpp"
#include "relnet/quadrature.hpp"
#include "relnet/specfun.hpp"

#include <cmath>

namespace relnet {

FailureModel weibull_model(double lambda, double kappa) {
    if (lambda <= 0 || kappa <= 0) throw UnsupportedError("weibull requires lambda, kappa > 0");
    PowerLawHazard m;
    m.beta = 1.0 / kappa - 1.0;
    m.a_beta = 1.0 / (kappa * lambda);
    m.chi = [lambda, kappa](double p) { return std::pow(-std::log(p), 1.0 / kappa) / lambda; };
    m.neg_chi_prime = [lambda, kappa](double p) {
        return std::pow(-std::log(p), 1.0 / kappa - 1.0) / (kappa * lambda * p);
    };
    return m;
}

double model_chi(const FailureModel& model, double p) {
    if (const auto* e = std::get_if<Exponential>(&model)) return -std::log(p) / e->lambda;
    const auto& h = std::get<PowerLawHazard>(model);
    if (!h.chi) throw UnsupportedError("PowerLawHazard model lacks its inverse map chi(p)");
    return h.chi(p);
}

Rational exact_moment_scaled(const Poly& reliability, int m) {
    if (m < 1) throw UnsupportedError("moment order must be >= 1");
    if (reliability.coeff(0) != 0)
        throw DivergentMomentError("reliability polynomial has R(0) != 0; the moment diverges");
    Rational acc(0);
    for (int k = 1; k <= reliability.degree(); ++k) {
        const Rational& c = reliability.coeff(k);
        if (c == 0) continue;
        acc += c / Rational(rational_pow(Rational(k), m));
    }
    return acc * Rational(factorial_int(static_cast<unsigned>(m)));
}

MomentResult exact_moment(const Poly& reliability, int m, double lambda) {
    Rational scaled = exact_moment_scaled(reliability, m);
    MomentResult out;
    out.order = m;
    out.exact = scaled;
    out.value = to_double(scaled) / std::pow(lambda, m);
    return out;
}

std::vector<Rational> cumulants_from_moments(const std::vector<Rational>& mu) {
    // kappa_m = mu_m - sum_{j=1}^{m-1} C(m-1, j-1) kappa_j mu_{m-j}
    std::vector<Rational> kappa;
    kappa.reserve(mu.size());
    for (size_t m = 1; m <= mu.size(); ++m) {
        Rational acc = mu[m - 1];
        for (size_t j = 1; j < m; ++j)
            acc -= Rational(binomial_coeff(static_cast<unsigned>(m - 1), static_cast<unsigned>(j - 1))) *
                   kappa[j - 1] * mu[m - j - 1];
        kappa.push_back(acc);
    }
    return kappa;
}

Rational kn_cumulant_scaled(int k, int n, int m) {
    if (k < 1 || k > n) throw UnsupportedError("kofn cumulant requires 1 <= k <= n");
    if (m < 1) throw UnsupportedError("cumulant order must be >= 1");
    Rational acc(0);
    for (int i = k; i <= n; ++i) acc += Rational(1) / rational_pow(Rational(i), m);
    return acc * Rational(factorial_int(static_cast<unsigned>(m - 1)));
}

double mgf_value(const Poly& reliability, double z, double lambda) {
    const double w = z / lambda;
    int k_min = -1;
    for (int k = 0; k <= reliability.degree(); ++k)
        if (reliability.coeff(k) != 0) {
            k_min = k;
            break;
        }
    if (k_min == 0) throw DivergentMgfError("reliability polynomial has R(0) != 0");
    if (k_min > 0 && w >= k_min)
        throw DivergentMgfError("z/lambda >= smallest exponent; the transform diverges");
    double acc = 1.0;
    for (int k = 1; k <= reliability.degree(); ++k) {
        const Rational& c = reliability.coeff(k);
        if (c == 0) continue;
        acc += w * to_double(c) / (k - w);
    }
    return acc;
}

namespace {

double fan_limit_quadrature(int m) {
    // m int_0^1 dp (-ln p)^(m-1) p / (1 - p(1-p))^2, u = -ln p
    auto integrand = [m](double u) {
        if (u <= 0.0) return 0.0;
        double p = std::exp(-u);
        double d = 1.0 - p * (1.0 - p);
        double w = m > 1 ? std::pow(u, m - 1) : 1.0;
        return w * p * p / (d * d);
    };
    return m * integrate(integrand, 0.0, 90.0 + 10.0 * m, 1e-13);
}

double fan_limit_closed_form(int m) {
    const double third = 1.0 / 3.0;
    double t1 = (m % 2 ? -1.0 : 1.0) * m / std::pow(3.0, m + 1) * (1.0 + std::pow(2.0, 1 - m)) *
                (polygamma_fn(m - 1, third) - polygamma_fn(m - 1, 2 * third));
    // the second contribution is a 0 * 0 * inf form at m = 2; its value there is 0
    double t2 = 0.0;
    if (m != 2) {
        t2 = -to_double(Rational(factorial_int(static_cast<unsigned>(m)))) / std::pow(3.0, m - 1) *
             (1.0 - std::pow(2.0, 2 - m)) * (std::pow(3.0, m - 2) - 1.0) * riemann_zeta_fn(m - 1);
    }
    return t1 + t2;
}

}  // namespace

MomentResult fan_limit_moment(int m, double lambda, FanLimitMethod method) {
    if (m < 1) throw UnsupportedError("moment order must be >= 1");
    double scaled = method == FanLimitMethod::Quadrature ? fan_limit_quadrature(m)
                                                         : fan_limit_closed_form(m);
    MomentResult out;
    out.order = m;
    out.value = scaled / std::pow(lambda, m);
    return out;
}

MomentResult nonexp_moment(const Poly& reliability, const FailureModel& model, int m) {
    if (m < 1) throw UnsupportedError("moment order must be >= 1");
    if (reliability.coeff(0) != 0)
        throw DivergentMomentError("reliability polynomial has R(0) != 0");

    std::function<double(double)> chi, ncp;
    if (const auto* e = std::get_if<Exponential>(&model)) {
        double lambda = e->lambda;
        chi = [lambda](double p) { return -std::log(p) / lambda; };
        ncp = [lambda](double p) { return 1.0 / (lambda * p); };
    } else {
        const auto& h = std::get<PowerLawHazard>(model);
        if (!h.chi || !h.neg_chi_prime)
            throw UnsupportedError("nonexp_moment needs the full inverse map chi and chi'");
        chi = h.chi;
        ncp = h.neg_chi_prime;
    }

    auto integrand = [&](double p) {
        if (p <= 0.0 || p >= 1.0) return 0.0;
        double r = reliability.eval_double(p);
        if (r == 0.0) return 0.0;
        double w = m > 1 ? std::pow(chi(p), m - 1) : 1.0;
        return w * r * ncp(p);
    };
    MomentResult out;
    out.order = m;
    out.value = m * integrate_unit(integrand, 1e-11);
    return out;
}

}  // namespace relnet
