#include "relnet/architectures.hpp"

#include "relnet/errors.hpp"

#include <algorithm>

namespace relnet {

namespace {

Poly ppoly(std::initializer_list<long> ints) { return Poly(Var::P, ints); }

// K4 ladder recursion data. Seeds: the eigen decomposition
// alpha+ zeta+^n + alpha- zeta-^n equals the graph reliability for n >= 1
// but evaluates to (1+p)/2 at n = 0, so that value (not the degenerate
// R_0 = 1) seeds the recursion.
const Poly& k4_trace() {
    static const Poly t = ppoly({0, 2, 4, -14, 13, -4});
    return t;
}
const Poly& k4_det() {
    static const Poly d = ppoly({0, 0, 0, 4, -18, 36, -42, 30, -12, 2});
    return d;
}
const Poly& k4_r1() {
    static const Poly r = ppoly({0, 1, 2, 0, -7, 7, -2});
    return r;
}
const Poly& k4_seed0() {
    static const Poly s(Var::P, {Rational(1, 2), Rational(1, 2)});
    return s;
}

// Double fan recursion acts on the unavailability U_n.
const Poly& doublefan_trace() {
    static const Poly t = ppoly({1, -1}) * ppoly({1, 2, -2});
    return t;
}
const Poly& doublefan_det() {
    static const Poly d = ppoly({0, 1}) * ppoly({1, -1}).pow(3);
    return d;
}

std::vector<Poly> street_numer() {
    const Poly omp = ppoly({1, -1});
    return {
        ppoly({0, 0, 1}),
        -(omp * ppoly({0, 0, 0, 0, 3, 3, -4})),
        omp.pow(3) * ppoly({0, 0, 0, 0, 0, 0, 2, 11, -3, -2}),
        omp.pow(3) * ppoly({0, 0, 0, 0, 0, 0, 0, 0, 2, -4, 3, 11, -13, 3}),
        -(omp.pow(4) * ppoly({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3, 6, -12, 10, -10, 4})),
        omp.pow(6) * ppoly({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 8, -1, -5, -1, 1}),
        -(omp.pow(8) * ppoly({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 5, -4})),
        omp.pow(10) * Poly::monomial(Var::P, 1, 18),
    };
}

std::vector<Poly> street_den1() {
    const Poly omp = ppoly({1, -1});
    return {
        ppoly({1}),
        -(ppoly({1, 0, -1}) * ppoly({0, 1, 1, -1})),
        omp.pow(2) * ppoly({0, 0, 0, 1, 1, 1, -2}),
        -(omp.pow(4) * Poly::monomial(Var::P, 1, 6)),
    };
}

std::vector<Poly> street_den2() {
    const Poly omp = ppoly({1, -1});
    return {
        ppoly({1}),
        -ppoly({0, 2, 2, 1, -9, 5}),
        omp * ppoly({0, 0, 1, 5, 5, -6, -15, 13, 1, -2}),
        -(omp.pow(2) * ppoly({0, 0, 0, 0, 2, 6, 6, -26, 17, -18, 27, -16, 3})),
        omp.pow(4) * ppoly({0, 0, 0, 0, 0, 0, 1, 6, 4, -1, -17, 9, 3, -2}),
        -(omp.pow(6) * ppoly({0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 4, 1, -7, 3})),
        omp.pow(8) * Poly::monomial(Var::P, 1, 12),
    };
}

std::vector<Poly> street_sequence(int n_max) {
    DenominatorRoot gf{street_numer(), street_den1(), street_den2()};
    std::vector<Poly> den = gf.full_denominator();  // z-degree 9, den[0] = 1
    std::vector<Poly> rs;
    rs.reserve(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        Poly acc = n < static_cast<int>(gf.numer.size()) ? gf.numer[static_cast<size_t>(n)]
                                                         : Poly(Var::P);
        for (int j = 1; j <= std::min<int>(n, static_cast<int>(den.size()) - 1); ++j)
            acc = acc - den[static_cast<size_t>(j)] * rs[static_cast<size_t>(n - j)];
        rs.push_back(std::move(acc));
    }
    return rs;
}

std::vector<Poly> two_term_sequence(const Poly& trace, const Poly& det, const Poly& seed0,
                                    const Poly& seed1, int n_max) {
    std::vector<Poly> xs{seed0, seed1};
    for (int n = 2; n <= n_max; ++n)
        xs.push_back(trace * xs[static_cast<size_t>(n - 1)] - det * xs[static_cast<size_t>(n - 2)]);
    xs.resize(static_cast<size_t>(n_max) + 1, seed0);
    return xs;
}

Poly kofn_polynomial(int k, int n) {
    // sum_{i=k}^{n} C(n,i) p^i (1-p)^(n-i)
    Poly acc(Var::P);
    const Poly omp = ppoly({1, -1});
    Poly p_pow = Poly::monomial(Var::P, 1, k);
    for (int i = k; i <= n; ++i) {
        if (i > k) p_pow = p_pow * ppoly({0, 1});
        acc = acc + p_pow * omp.pow(static_cast<unsigned>(n - i)) *
                        Rational(binomial_coeff(static_cast<unsigned>(n), static_cast<unsigned>(i)));
    }
    return acc;
}

Poly fan_polynomial(int n) {
    // closed form assembled over (1 - p(1-p))^2 and divided out exactly
    const Poly den1 = ppoly({1, -1, 1});
    const Poly den2 = den1 * den1;
    Poly inner = ppoly({0, 1}) * den1 * Rational(n) + ppoly({1, 0, 1});
    Poly numer = ppoly({0, 0, 1}) +
                 Poly::monomial(Var::P, 1, n) * ppoly({1, -1}).pow(static_cast<unsigned>(n + 2)) * inner;
    return numer.exact_div(den2);
}

}  // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::Series: return "series";
        case Family::Parallel: return "parallel";
        case Family::KOutOfN: return "kofn";
        case Family::K4Ladder: return "k4ladder";
        case Family::GeneralizedFan: return "fan";
        case Family::DoubleFan: return "doublefan";
        case Family::Street3xN: return "street3xn";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "series") return Family::Series;
    if (name == "parallel") return Family::Parallel;
    if (name == "kofn") return Family::KOutOfN;
    if (name == "k4ladder") return Family::K4Ladder;
    if (name == "fan" || name == "genfan") return Family::GeneralizedFan;
    if (name == "doublefan") return Family::DoubleFan;
    if (name == "street3xn" || name == "street") return Family::Street3xN;
    throw UnsupportedError("unknown family '" + name + "'");
}

void validate(const Architecture& arch) {
    const bool n0_ok = arch.family == Family::Street3xN || arch.family == Family::K4Ladder;
    if (arch.n < (n0_ok ? 0 : 1))
        throw UnsupportedError(std::string(family_name(arch.family)) + ": size n must be >= " +
                               (n0_ok ? "0" : "1"));
    if (arch.family == Family::KOutOfN) {
        if (arch.k < 1 || arch.k > arch.n)
            throw UnsupportedError("kofn requires 1 <= k <= n");
    }
}

std::vector<Poly> DenominatorRoot::full_denominator() const {
    std::vector<Poly> out(den1.size() + den2.size() - 1, Poly(Var::P));
    for (size_t i = 0; i < den1.size(); ++i)
        for (size_t j = 0; j < den2.size(); ++j) out[i + j] = out[i + j] + den1[i] * den2[j];
    return out;
}

std::vector<Poly> reliability_sequence(Family family, int n_max, int k) {
    std::vector<Poly> out;
    switch (family) {
        case Family::Series: {
            for (int n = 0; n <= n_max; ++n) out.push_back(Poly::monomial(Var::P, 1, n));
            return out;
        }
        case Family::Parallel: {
            const Poly one = Poly::constant(Var::P, 1);
            for (int n = 0; n <= n_max; ++n)
                out.push_back(n == 0 ? Poly(Var::P) : one - ppoly({1, -1}).pow(static_cast<unsigned>(n)));
            // the n = 0 parallel system has no path at all
            return out;
        }
        case Family::KOutOfN: {
            for (int n = 0; n <= n_max; ++n)
                out.push_back(n == 0 ? Poly(Var::P) : kofn_polynomial(std::min(k, n), n));
            return out;
        }
        case Family::K4Ladder: {
            out = two_term_sequence(k4_trace(), k4_det(), k4_seed0(), k4_r1(), std::max(n_max, 1));
            out[0] = Poly::constant(Var::P, 1);  // degenerate n = 0 ladder: source == target
            out.resize(static_cast<size_t>(n_max) + 1, out[0]);
            return out;
        }
        case Family::DoubleFan: {
            auto us = two_term_sequence(doublefan_trace(), doublefan_det(),
                                        Poly::constant(Var::P, 1), ppoly({1, 0, -1}),
                                        std::max(n_max, 1));
            const Poly one = Poly::constant(Var::P, 1);
            for (int n = 0; n <= n_max; ++n)
                out.push_back(n == 0 ? Poly(Var::P) : one - us[static_cast<size_t>(n)]);
            return out;
        }
        case Family::GeneralizedFan: {
            for (int n = 0; n <= n_max; ++n)
                out.push_back(n == 0 ? Poly(Var::P) : fan_polynomial(n));
            return out;
        }
        case Family::Street3xN:
            return street_sequence(n_max);
    }
    throw UnsupportedError("unhandled family");
}

Poly reliability_polynomial(const Architecture& arch) {
    validate(arch);
    return reliability_sequence(arch.family, arch.n, arch.k).back();
}

Graph graph(const Architecture& arch) {
    validate(arch);
    const int n = arch.n;
    Graph g;
    switch (arch.family) {
        case Family::Series: {
            g.node_count = n + 1;
            for (int i = 0; i < n; ++i) g.edges.emplace_back(i, i + 1);
            g.source = 0;
            g.target = n;
            return g;
        }
        case Family::Parallel: {
            g.node_count = 2;
            for (int i = 0; i < n; ++i) g.edges.emplace_back(0, 1);
            g.source = 0;
            g.target = 1;
            return g;
        }
        case Family::KOutOfN:
            throw NoGraphRealizationError("kofn is a structure function, not a two-terminal graph");
        case Family::K4Ladder: {
            if (n == 0) throw NoGraphRealizationError("k4ladder n = 0 degenerates to a single node");
            // a_i = 2i, b_i = 2i+1; cell i is the complete graph on
            // {a_{i-1}, b_{i-1}, a_i, b_i}; the rung a_i b_i is shared.
            g.node_count = 2 * (n + 1);
            g.edges.emplace_back(0, 1);
            for (int i = 1; i <= n; ++i) {
                int a0 = 2 * (i - 1), b0 = a0 + 1, a1 = 2 * i, b1 = a1 + 1;
                g.edges.emplace_back(a0, a1);
                g.edges.emplace_back(a0, b1);
                g.edges.emplace_back(b0, a1);
                g.edges.emplace_back(b0, b1);
                g.edges.emplace_back(a1, b1);
            }
            g.source = 0;
            g.target = 2 * n;
            return g;
        }
        case Family::GeneralizedFan: {
            // S_0..S_n = 0..n, hub T = n+1 adjacent to every S_i
            g.node_count = n + 2;
            for (int i = 1; i <= n; ++i) g.edges.emplace_back(i - 1, i);
            for (int i = 0; i <= n; ++i) g.edges.emplace_back(n + 1, i);
            g.source = 0;
            g.target = n;
            return g;
        }
        case Family::DoubleFan: {
            // S = 0, T = 1, V_i = 1+i; chain along the V's
            g.node_count = n + 2;
            for (int i = 1; i <= n; ++i) {
                g.edges.emplace_back(0, 1 + i);
                g.edges.emplace_back(1 + i, 1);
            }
            for (int i = 1; i < n; ++i) g.edges.emplace_back(1 + i, 2 + i);
            g.source = 0;
            g.target = 1;
            return g;
        }
        case Family::Street3xN: {
            // rows S/T/U, columns 0..n: S_j = 3j, T_j = 3j+1, U_j = 3j+2
            g.node_count = 3 * (n + 1);
            for (int j = 0; j <= n; ++j) {
                g.edges.emplace_back(3 * j, 3 * j + 1);
                g.edges.emplace_back(3 * j + 1, 3 * j + 2);
            }
            for (int j = 1; j <= n; ++j) {
                g.edges.emplace_back(3 * (j - 1), 3 * j);
                g.edges.emplace_back(3 * (j - 1) + 1, 3 * j + 1);
                g.edges.emplace_back(3 * (j - 1) + 2, 3 * j + 2);
            }
            g.source = 0;
            g.target = 3 * n + 2;
            return g;
        }
    }
    throw UnsupportedError("unhandled family");
}

EigenData eigen_data(const Architecture& arch) {
    validate(arch);
    switch (arch.family) {
        case Family::Series:
            return ExplicitEigen{ppoly({0, 1}), Poly::constant(Var::P, 1), false};
        case Family::Parallel:
            // U_n = (1-p)^n
            return ExplicitEigen{ppoly({1, -1}), Poly::constant(Var::P, 1), true};
        case Family::K4Ladder:
            return TwoEigen{k4_trace(), k4_det(), k4_seed0(), k4_r1(), false};
        case Family::DoubleFan:
            return TwoEigen{doublefan_trace(), doublefan_det(), Poly::constant(Var::P, 1),
                            ppoly({1, 0, -1}), true};
        case Family::Street3xN:
            return DenominatorRoot{street_numer(), street_den1(), street_den2()};
        case Family::GeneralizedFan:
            // repeated eigenvalue p(1-p) under an n-linear prefactor
            return RepeatedEigen{ppoly({0, 1, -1})};
        case Family::KOutOfN:
            throw UnsupportedError("kofn carries no transfer-matrix eigen data");
    }
    throw UnsupportedError("unhandled family");
}

RationalFunction fan_limit_reliability() {
    const Poly den1 = ppoly({1, -1, 1});
    return RationalFunction{ppoly({0, 0, 1}), den1 * den1};
}

}  // namespace relnet
