#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace relnet {

// All exact coefficients live on arbitrary-precision rationals. The
// multiprecision backend keeps values normalized (gcd 1, positive
// denominator), so arithmetic is exact and never rounded.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

// "a/b" when b != 1, plain integer otherwise.
std::string rational_str(const Rational& r);

// Accepts "a", "a/b" and plain decimal forms ("0.25" becomes 1/4 exactly).
Rational parse_rational(const std::string& text);

// Integer powers, negative exponents allowed for nonzero base.
Rational rational_pow(const Rational& base, long exponent);

// Exact rational equal to the IEEE value of x (x must be finite).
Rational rational_from_double(double x);

BigInt binomial_coeff(unsigned n, unsigned k);
BigInt factorial_int(unsigned n);

}  // namespace relnet
