#pragma once

#include "relnet/rational.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/polygamma.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include <cmath>

namespace relnet {

inline constexpr double euler_gamma_const = 0.57721566490153286060651209008240243;

inline double gamma_fn(double x) { return std::tgamma(x); }
inline double gamma_fn(const Rational& x) { return std::tgamma(to_double(x)); }

inline double digamma_fn(double x) { return boost::math::digamma(x); }

// psi^(n); n = 0 is the digamma itself
inline double polygamma_fn(int n, double x) {
    if (n == 0) return boost::math::digamma(x);
    return boost::math::polygamma(n, x);
}

inline double riemann_zeta_fn(double s) { return boost::math::zeta(s); }

inline Rational harmonic_exact(long n) {
    Rational acc(0);
    for (long k = 1; k <= n; ++k) acc += Rational(1, k);
    return acc;
}

inline double harmonic(long n) {
    if (n <= 0) return 0.0;
    if (n < 4096) return to_double(harmonic_exact(n));
    return boost::math::digamma(static_cast<double>(n) + 1.0) + euler_gamma_const;
}

}  // namespace relnet
