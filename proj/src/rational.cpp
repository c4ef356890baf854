#include "relnet/rational.hpp"

#include "relnet/errors.hpp"

#include <cmath>
#include <cstdint>

namespace relnet {

std::string rational_str(const Rational& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw UnsupportedError("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        BigInt n(text.substr(0, slash));
        BigInt d(text.substr(slash + 1));
        if (d == 0) throw UnsupportedError("zero denominator in '" + text + "'");
        return Rational(n, d);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(BigInt(text));
    // decimal literal: digits after the dot give a power-of-ten denominator
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    if (digits.empty() || digits == "-" || digits == "+")
        throw UnsupportedError("malformed rational literal '" + text + "'");
    BigInt n(digits);
    BigInt d = 1;
    for (size_t i = dot + 1; i < text.size(); ++i) d *= 10;
    return Rational(n, d);
}

Rational rational_pow(const Rational& base, long exponent) {
    if (exponent == 0) return Rational(1);
    if (exponent < 0) {
        if (base == 0) throw UnsupportedError("0 cannot be raised to a negative power");
        return Rational(1) / rational_pow(base, -exponent);
    }
    Rational acc(1), b = base;
    unsigned long e = static_cast<unsigned long>(exponent);
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw UnsupportedError("non-finite double has no rational value");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5, 1)
    // 53 doublings make the mantissa integral
    auto mant_int = static_cast<std::int64_t>(std::ldexp(mant, 53));
    exp -= 53;
    Rational r(mant_int);
    BigInt two = 1;
    two <<= static_cast<unsigned>(exp < 0 ? -exp : exp);
    if (exp >= 0) return r * Rational(two);
    return r / Rational(two);
}

BigInt binomial_coeff(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt acc = 1;
    for (unsigned i = 0; i < k; ++i) {
        acc *= n - i;
        acc /= i + 1;
    }
    return acc;
}

BigInt factorial_int(unsigned n) {
    BigInt acc = 1;
    for (unsigned i = 2; i <= n; ++i) acc *= i;
    return acc;
}

}  // namespace relnet
