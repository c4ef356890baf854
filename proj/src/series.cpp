#include "relnet/series.hpp"

#include "relnet/errors.hpp"

#include <algorithm>
#include <sstream>

namespace relnet {

namespace {
const Rational kZero(0);
}

Series::Series(Var var, int order) : var_(var), order_(order) {
    if (order < 0) throw UnsupportedError("series order must be non-negative");
    coeffs_.assign(static_cast<size_t>(order) + 1, Rational(0));
}

Series::Series(Var var, int order, std::vector<Rational> coeffs) : Series(var, order) {
    for (size_t i = 0; i < coeffs.size() && i < coeffs_.size(); ++i) coeffs_[i] = std::move(coeffs[i]);
}

Series Series::one(Var var, int order) {
    Series s(var, order);
    s.coeffs_[0] = 1;
    return s;
}

Series Series::identity(Var var, int order) {
    Series s(var, order);
    if (order >= 1) s.coeffs_[1] = 1;
    return s;
}

Series Series::from_poly(const Poly& p, int order) {
    Series s(p.var(), order);
    for (int k = 0; k <= std::min(order, p.degree()); ++k) s.coeffs_[static_cast<size_t>(k)] = p.coeff(k);
    return s;
}

const Rational& Series::coeff(int k) const {
    if (k < 0 || k > order_) return kZero;
    return coeffs_[static_cast<size_t>(k)];
}

bool Series::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

int Series::valuation() const {
    for (int k = 0; k <= order_; ++k)
        if (coeffs_[static_cast<size_t>(k)] != 0) return k;
    return -1;
}

void Series::require_compatible(const Series& rhs) const {
    if (var_ != rhs.var_)
        throw VarMismatchError(std::string("series variables differ: ") + var_name(var_) + " vs " +
                               var_name(rhs.var_));
}

Series Series::operator-() const {
    Series out(var_, order_);
    for (int k = 0; k <= order_; ++k) out.coeffs_[static_cast<size_t>(k)] = -coeffs_[static_cast<size_t>(k)];
    return out;
}

Series Series::operator+(const Series& rhs) const {
    require_compatible(rhs);
    Series out(var_, std::min(order_, rhs.order_));
    for (int k = 0; k <= out.order_; ++k) out.coeffs_[static_cast<size_t>(k)] = coeff(k) + rhs.coeff(k);
    return out;
}

Series Series::operator-(const Series& rhs) const {
    require_compatible(rhs);
    Series out(var_, std::min(order_, rhs.order_));
    for (int k = 0; k <= out.order_; ++k) out.coeffs_[static_cast<size_t>(k)] = coeff(k) - rhs.coeff(k);
    return out;
}

Series Series::operator*(const Series& rhs) const {
    require_compatible(rhs);
    Series out(var_, std::min(order_, rhs.order_));
    for (int i = 0; i <= out.order_; ++i) {
        if (coeff(i) == 0) continue;
        for (int j = 0; i + j <= out.order_; ++j) {
            if (rhs.coeff(j) == 0) continue;
            out.coeffs_[static_cast<size_t>(i + j)] += coeff(i) * rhs.coeff(j);
        }
    }
    return out;
}

Series Series::operator*(const Rational& s) const {
    Series out(var_, order_);
    for (int k = 0; k <= order_; ++k) out.coeffs_[static_cast<size_t>(k)] = coeff(k) * s;
    return out;
}

Series Series::div(const Series& rhs) const {
    require_compatible(rhs);
    if (rhs.coeff(0) == 0)
        throw UnsupportedError("series division requires nonzero constant term in the divisor");
    Series out(var_, std::min(order_, rhs.order_));
    for (int k = 0; k <= out.order_; ++k) {
        Rational acc = coeff(k);
        for (int j = 1; j <= k; ++j) acc -= rhs.coeff(j) * out.coeffs_[static_cast<size_t>(k - j)];
        out.coeffs_[static_cast<size_t>(k)] = acc / rhs.coeff(0);
    }
    return out;
}

Series Series::log() const {
    if (coeff(0) != 1) throw UnsupportedError("series log requires constant term 1");
    // S T' = S'  with T = log S
    Series out(var_, order_);
    for (int k = 1; k <= order_; ++k) {
        Rational acc = coeff(k) * Rational(k);
        for (int j = 1; j < k; ++j) acc -= Rational(j) * out.coeffs_[static_cast<size_t>(j)] * coeff(k - j);
        out.coeffs_[static_cast<size_t>(k)] = acc / Rational(k);
    }
    return out;
}

Series Series::exp() const {
    if (coeff(0) != 0) throw UnsupportedError("series exp requires constant term 0");
    // E' = S' E
    Series out(var_, order_);
    out.coeffs_[0] = 1;
    for (int k = 1; k <= order_; ++k) {
        Rational acc(0);
        for (int j = 1; j <= k; ++j) acc += Rational(j) * coeff(j) * out.coeffs_[static_cast<size_t>(k - j)];
        out.coeffs_[static_cast<size_t>(k)] = acc / Rational(k);
    }
    return out;
}

Series Series::compose(const Series& inner) const {
    if (inner.coeff(0) != 0)
        throw UnsupportedError("series composition requires zero constant term in the inner series");
    int ord = std::min(order_, inner.order_);
    // Horner over the truncated outer coefficients
    Series acc(inner.var_, ord);
    for (int k = ord; k >= 0; --k) {
        acc = acc * inner.truncated(ord);
        acc.coeffs_[0] += coeff(k);
    }
    return acc;
}

Series Series::truncated(int new_order) const {
    Series out(var_, new_order);
    for (int k = 0; k <= std::min(order_, new_order); ++k) out.coeffs_[static_cast<size_t>(k)] = coeff(k);
    return out;
}

Series Series::pow(unsigned e) const {
    Series acc = Series::one(var_, order_);
    Series b = *this;
    while (e) {
        if (e & 1) acc = acc * b;
        if (e >>= 1) b = b * b;
    }
    return acc;
}

std::string Series::str() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= order_; ++k) {
        if (coeff(k) == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << rational_str(coeff(k));
        if (k > 0) os << "*" << var_name(var_) << "^" << k;
    }
    if (first) os << "0";
    os << " + O(" << var_name(var_) << "^" << order_ + 1 << ")";
    return os.str();
}

Series poly_one_minus_series(const Poly& p, Var target, int order) {
    // x = 1 - y: accumulate c_k (1-y)^k truncated at the requested order
    Series acc(target, order);
    Series base(target, order, {Rational(1), Rational(-1)});
    Series power = Series::one(target, order);
    for (int k = 0; k <= p.degree(); ++k) {
        if (k > 0) power = power * base;
        if (p.coeff(k) != 0) acc = acc + power * p.coeff(k);
    }
    return acc;
}

Series eval_poly_in_zeta(const std::vector<Series>& w, const Series& zeta) {
    if (w.empty()) throw UnsupportedError("empty polynomial in zeta");
    Series acc(zeta.var(), zeta.order());
    for (size_t j = w.size(); j-- > 0;) {
        acc = acc * zeta;
        acc = acc + w[j].truncated(zeta.order());
    }
    return acc;
}

Series solve_series_root(const std::vector<Series>& w, int order) {
    if (w.size() < 2) throw DegenerateRootError("constant polynomial has no root to track");
    const Var var = w[0].var();
    Rational w_at_1(0), wp_at_1(0);
    for (size_t j = 0; j < w.size(); ++j) {
        w_at_1 += w[j].coeff(0);
        wp_at_1 += Rational(static_cast<long>(j)) * w[j].coeff(0);
    }
    if (w_at_1 != 0)
        throw DegenerateRootError("W(1, 0) != 0: no eigenvalue branch starting at 1");
    if (wp_at_1 == 0)
        throw DegenerateRootError("dW/dzeta(1, 0) = 0: repeated dominant eigenvalue");

    std::vector<Series> wp;  // dW/dzeta
    for (size_t j = 1; j < w.size(); ++j) wp.push_back(w[j] * Rational(static_cast<long>(j)));

    Series zeta = Series::one(var, 0);
    int cur = 0;
    while (cur < order) {
        cur = std::min(order, std::max(1, cur * 2));
        Series z = zeta.truncated(cur);
        std::vector<Series> wt, wpt;
        wt.reserve(w.size());
        wpt.reserve(wp.size());
        for (const auto& c : w) wt.push_back(c.truncated(cur));
        for (const auto& c : wp) wpt.push_back(c.truncated(cur));
        Series val = eval_poly_in_zeta(wt, z);
        Series der = eval_poly_in_zeta(wpt, z);
        zeta = z - val.div(der);
    }
    return zeta;
}

}  // namespace relnet
