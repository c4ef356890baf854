#include "relnet/quadrature.hpp"

#include "relnet/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>

namespace relnet {

double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol) {
    using boost::math::quadrature::gauss_kronrod;
    double error = 0.0;
    double value = gauss_kronrod<double, 15>::integrate(f, a, b, 15, rel_tol, &error);
    if (std::isnan(value))
        throw QuadratureError("Gauss-Kronrod integration returned NaN");
    if (error > std::max(1e-14, 100 * rel_tol) * (std::abs(value) + 1e-300) && error > 1e-13)
        throw QuadratureError("Gauss-Kronrod integration did not reach the requested tolerance");
    return value;
}

double integrate_unit(const std::function<double(double)>& f, double rel_tol) {
    boost::math::quadrature::tanh_sinh<double> integrator;
    double error = 0.0, l1 = 0.0;
    double value = integrator.integrate(f, 0.0, 1.0, rel_tol, &error, &l1);
    if (std::isnan(value)) throw QuadratureError("tanh-sinh integration returned NaN");
    return value;
}

double log_kernel_integral(const Poly& reliability, int m, double rel_tol) {
    if (reliability.coeff(0) != 0)
        throw DivergentMomentError("reliability polynomial has a nonzero constant term");
    if (m < 1) throw UnsupportedError("moment order must be >= 1");
    // integrand decays like u^(m-1) e^(-k_min u); 80 time constants is far
    // below double rounding for every m used here
    const double cutoff = 80.0 + 10.0 * m;
    auto integrand = [&](double u) {
        if (u <= 0.0) return 0.0;
        double w = m > 1 ? std::pow(u, m - 1) : 1.0;
        return w * reliability.eval_double(std::exp(-u));
    };
    return integrate(integrand, 0.0, cutoff, rel_tol);
}

}  // namespace relnet
