#pragma once

#include "relnet/poly.hpp"

#include <string>
#include <vector>

namespace relnet {

/// Truncated power series up to a declared order K (inclusive), exact
/// rational coefficients. Binary operations work at the common (minimum)
/// truncation order; coefficients beyond K are never produced.
class Series {
public:
    Series(Var var, int order);
    Series(Var var, int order, std::vector<Rational> coeffs);

    static Series one(Var var, int order);
    static Series identity(Var var, int order);  // the series "x"
    static Series from_poly(const Poly& p, int order);

    Var var() const { return var_; }
    int order() const { return order_; }
    const Rational& coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    /// Index of the lowest nonzero coefficient, -1 for the zero series.
    int valuation() const;

    Series operator-() const;
    Series operator+(const Series& rhs) const;
    Series operator-(const Series& rhs) const;
    Series operator*(const Series& rhs) const;
    Series operator*(const Rational& s) const;
    bool operator==(const Series& rhs) const = default;

    /// rhs must have nonzero constant term.
    Series div(const Series& rhs) const;
    /// Requires constant term exactly 1.
    Series log() const;
    /// Requires constant term exactly 0.
    Series exp() const;
    /// Substitute inner into this; inner must have zero constant term.
    Series compose(const Series& inner) const;

    Series truncated(int new_order) const;
    Series pow(unsigned e) const;

    std::string str() const;

private:
    void require_compatible(const Series& rhs) const;

    Var var_;
    int order_;
    std::vector<Rational> coeffs_;  // size order_+1
};

inline Series operator*(const Rational& s, const Series& a) { return a * s; }

/// shift_var: expand a polynomial in x around x = 1 - y, truncated series in y.
Series poly_one_minus_series(const Poly& p, Var target, int order);

/// Solve W(zeta, x) = 0 for a series root with zeta(0) = 1 by Newton
/// iteration with order doubling. W is given by its zeta-coefficients
/// w[j] (truncated series in x). Requires W(1, 0) = 0 and a simple root:
/// dW/dzeta (1, 0) != 0, otherwise DegenerateRootError.
Series solve_series_root(const std::vector<Series>& w, int order);

/// Evaluate W(zeta) = sum_j w[j] zeta^j at a series argument.
Series eval_poly_in_zeta(const std::vector<Series>& w, const Series& zeta);

}  // namespace relnet
