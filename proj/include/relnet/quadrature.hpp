#pragma once

#include "relnet/poly.hpp"

#include <functional>

namespace relnet {

/// Adaptive Gauss-Kronrod integral over [a, b] (b may be infinite).
/// Throws QuadratureError when the error estimate misses rel_tol badly.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-12);

/// tanh-sinh integral over (0, 1); tolerates integrable endpoint
/// singularities on both sides.
double integrate_unit(const std::function<double(double)>& f, double rel_tol = 1e-12);

/// int_0^1 dp/p (-ln p)^(m-1) R(p), computed after the substitution
/// u = -ln p as int_0^inf u^(m-1) R(e^-u) du. R must have a zero constant
/// term, otherwise the integral diverges at p = 0.
double log_kernel_integral(const Poly& reliability, int m, double rel_tol = 1e-12);

}  // namespace relnet
