#include "relnet/poly.hpp"

#include "relnet/errors.hpp"

#include <sstream>

namespace relnet {

namespace {
const Rational kZero(0);
}

const char* var_name(Var v) {
    switch (v) {
        case Var::P: return "p";
        case Var::Q: return "q";
        case Var::Z: return "z";
    }
    return "?";
}

Poly::Poly(Var var, std::vector<Rational> coeffs) : var_(var), coeffs_(std::move(coeffs)) {
    trim();
}

Poly::Poly(Var var, std::initializer_list<long> ints) : var_(var) {
    coeffs_.reserve(ints.size());
    for (long v : ints) coeffs_.emplace_back(v);
    trim();
}

Poly Poly::constant(Var var, const Rational& c) {
    return Poly(var, std::vector<Rational>{c});
}

Poly Poly::monomial(Var var, const Rational& c, int k) {
    std::vector<Rational> cs(static_cast<size_t>(k) + 1);
    cs.back() = c;
    return Poly(var, std::move(cs));
}

const Rational& Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(k)];
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Poly::require_same_var(const Poly& rhs) const {
    if (var_ != rhs.var_)
        throw VarMismatchError(std::string("polynomial variables differ: ") + var_name(var_) +
                               " vs " + var_name(rhs.var_));
}

Poly Poly::operator-() const {
    std::vector<Rational> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
    return Poly(var_, std::move(out));
}

Poly Poly::operator+(const Poly& rhs) const {
    require_same_var(rhs);
    std::vector<Rational> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (size_t i = 0; i < out.size(); ++i) out[i] = coeff(static_cast<int>(i)) + rhs.coeff(static_cast<int>(i));
    return Poly(var_, std::move(out));
}

Poly Poly::operator-(const Poly& rhs) const {
    require_same_var(rhs);
    std::vector<Rational> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (size_t i = 0; i < out.size(); ++i) out[i] = coeff(static_cast<int>(i)) - rhs.coeff(static_cast<int>(i));
    return Poly(var_, std::move(out));
}

Poly Poly::operator*(const Poly& rhs) const {
    require_same_var(rhs);
    if (is_zero() || rhs.is_zero()) return Poly(var_);
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return Poly(var_, std::move(out));
}

Poly Poly::operator*(const Rational& s) const {
    std::vector<Rational> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * s;
    return Poly(var_, std::move(out));
}

Poly Poly::pow(unsigned e) const {
    Poly acc = Poly::constant(var_, 1);
    Poly b = *this;
    while (e) {
        if (e & 1) acc = acc * b;
        if (e >>= 1) b = b * b;
    }
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly(var_);
    std::vector<Rational> out(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return Poly(var_, std::move(out));
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Poly::eval_double(double x) const {
    return to_double(eval(rational_from_double(x)));
}

Poly Poly::exact_div(const Poly& d) const {
    require_same_var(d);
    if (d.is_zero()) throw NonzeroRemainderError("division by the zero polynomial");
    if (is_zero()) return Poly(var_);
    if (degree() < d.degree())
        throw NonzeroRemainderError("degree of numerator below denominator");
    std::vector<Rational> rem = coeffs_;
    const int dd = d.degree();
    std::vector<Rational> q(static_cast<size_t>(degree() - dd) + 1);
    for (int i = degree(); i >= dd; --i) {
        Rational c = rem[static_cast<size_t>(i)] / d.coeffs_.back();
        q[static_cast<size_t>(i - dd)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j) rem[static_cast<size_t>(i - dd + j)] -= c * d.coeffs_[static_cast<size_t>(j)];
    }
    for (const Rational& r : rem)
        if (r != 0) throw NonzeroRemainderError("nonzero remainder in exact division");
    return Poly(var_, std::move(q));
}

Poly Poly::one_minus_var(Var new_var) const {
    // sum_k c_k (1-y)^k, accumulated with an incrementally updated power
    Poly acc(new_var);
    Poly base(new_var, {1, -1});
    Poly power = Poly::constant(new_var, 1);
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (k > 0) power = power * base;
        if (coeffs_[k] != 0) acc = acc + power * coeffs_[k];
    }
    return acc;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rational a = c > 0 ? c : Rational(-c);
        if (a != 1 || k == 0) os << rational_str(a);
        if (k > 0) {
            if (a != 1) os << "*";
            os << var_name(var_);
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

}  // namespace relnet
