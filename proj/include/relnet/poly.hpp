#pragma once

#include "relnet/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace relnet {

// Variable tag for polynomials and truncated series. p is an edge
// reliability, q = 1-p, z is the generating-function variable.
enum class Var : unsigned char { P, Q, Z };

const char* var_name(Var v);

/// Dense univariate polynomial with exact rational coefficients.
/// coeffs()[k] is the coefficient of the k-th power; trailing zeros are
/// always trimmed, so degree() == coeffs().size() - 1 (and -1 for zero).
class Poly {
public:
    explicit Poly(Var var) : var_(var) {}
    Poly(Var var, std::vector<Rational> coeffs);
    Poly(Var var, std::initializer_list<long> ints);

    static Poly constant(Var var, const Rational& c);
    static Poly monomial(Var var, const Rational& c, int k);

    Var var() const { return var_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& coeff(int k) const;

    Poly operator-() const;
    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    Poly operator*(const Rational& s) const;
    bool operator==(const Poly& rhs) const = default;

    Poly pow(unsigned e) const;
    Poly derivative() const;

    Rational eval(const Rational& x) const;
    // Evaluates at the exact rational value of x and rounds once at the end;
    // coefficient cancellation makes plain double Horner useless here.
    double eval_double(double x) const;

    /// Exact quotient; throws NonzeroRemainderError if den does not divide.
    Poly exact_div(const Poly& den) const;

    /// Substitute x -> 1 - y, returning the exact polynomial in new_var.
    Poly one_minus_var(Var new_var) const;

    std::string str() const;

private:
    void trim();
    void require_same_var(const Poly& rhs) const;

    Var var_;
    std::vector<Rational> coeffs_;
};

inline Poly operator*(const Rational& s, const Poly& p) { return p * s; }

}  // namespace relnet
