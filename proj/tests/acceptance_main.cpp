// Acceptance suite: one check block per release criterion, one PASS/FAIL
// line each. Exit code = number of failed criteria.

#include "relnet/asymptotics.hpp"
#include "relnet/classify.hpp"
#include "relnet/errors.hpp"
#include "relnet/moments.hpp"
#include "relnet/oracle.hpp"
#include "relnet/specfun.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace relnet;

namespace {

struct Criterion {
    int id;
    std::string title;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    template <typename T>
    void expect_eq(const T& got, const T& want, const std::string& what) {
        if (!(got == want)) failures.push_back(what);
    }
};

std::vector<Criterion> results;

Criterion& criterion(int id, const std::string& title) {
    results.push_back(Criterion{id, title, {}});
    return results.back();
}

CutSignature eigen_sig(Family f, SignatureKind kind, int order = 8) {
    return signature_from_eigen(eigen_data({f, 1}), kind, order);
}

double exact_mttf(const Poly& r) { return to_double(exact_moment_scaled(r, 1)); }

// ---------------------------------------------------------------------------

void criterion_1() {
    auto& c = criterion(1, "closed-form series/parallel MTTF and k-out-of-n cumulants");
    for (int n = 1; n <= 10; ++n) {
        c.expect(exact_moment_scaled(reliability_polynomial({Family::Series, n}), 1) ==
                     Rational(1, n),
                 "series MTTF != 1/n at n=" + std::to_string(n));
        c.expect(exact_moment_scaled(reliability_polynomial({Family::Parallel, n}), 1) ==
                     harmonic_exact(n),
                 "parallel MTTF != H_n at n=" + std::to_string(n));
    }
    for (int n = 1; n <= 6; ++n) {
        for (int k = 1; k <= n; ++k) {
            Poly r = reliability_polynomial({Family::KOutOfN, n, k});
            std::vector<Rational> mu;
            for (int m = 1; m <= 4; ++m) mu.push_back(exact_moment_scaled(r, m));
            auto kappa = cumulants_from_moments(mu);
            for (int m = 1; m <= 4; ++m) {
                Rational expect = kn_cumulant_scaled(k, n, m);
                c.expect(kappa[static_cast<size_t>(m - 1)] == expect,
                         "kofn cumulant mismatch at (k,n,m)=(" + std::to_string(k) + "," +
                             std::to_string(n) + "," + std::to_string(m) + ")");
            }
        }
    }
}

void criterion_2() {
    auto& c = criterion(2, "reliability polynomials equal brute force on the graphs");
    auto check = [&](Family f, int n_max) {
        for (int n = 1; n <= n_max; ++n) {
            Architecture arch{f, n};
            if (f == Family::KOutOfN) continue;
            Poly formula = reliability_polynomial(arch);
            Poly brute = brute_force_polynomial(graph(arch));
            c.expect(formula == brute, std::string(family_name(f)) + " mismatch at n=" +
                                            std::to_string(n));
        }
    };
    check(Family::K4Ladder, 2);
    check(Family::DoubleFan, 4);
    check(Family::GeneralizedFan, 4);
    check(Family::Street3xN, 2);
    check(Family::Series, 6);
    check(Family::Parallel, 6);
    c.expect(reliability_polynomial({Family::K4Ladder, 1}) ==
                 Poly(Var::P, {0, 1, 2, 0, -7, 7, -2}),
             "K4 ladder R_1 differs from the printed polynomial");
}

void criterion_3() {
    auto& c = criterion(3, "eigen-expansions have the pinned rational coefficients");
    {
        CutSignature sig = eigen_sig(Family::K4Ladder, SignatureKind::SeriesLike);
        const std::vector<std::pair<int, Rational>> head{
            {4, Rational(1)}, {5, Rational(2)}, {6, Rational(0)}, {7, Rational(-4)},
            {8, Rational(9, 2)}};
        for (auto& [o, v] : head)
            c.expect(sig.head_at(o) == v, "K4 -ln zeta+ coefficient q^" + std::to_string(o));
        const std::vector<std::pair<int, Rational>> amp{
            {1, Rational(0)}, {2, Rational(0)}, {3, Rational(-2)}, {4, Rational(0)},
            {5, Rational(4)}, {6, Rational(-3)}, {7, Rational(6)}};
        for (auto& [o, v] : amp)
            c.expect(sig.amp_at(o) == v, "K4 alpha+ coefficient q^" + std::to_string(o));
    }
    {
        CutSignature sig = eigen_sig(Family::Street3xN, SignatureKind::SeriesLike, 6);
        // zeta+ = 1 - q^3 - 4q^4 - 4q^5 + 14q^6
        Series mln(Var::Q, 6);
        {
            std::vector<Rational> cs(7, Rational(0));
            for (auto& [o, v] : sig.head) if (o <= 6) cs[static_cast<size_t>(o)] = v;
            mln = Series(Var::Q, 6, cs);
        }
        Series zeta = (-mln).exp();
        const std::vector<Rational> expect{Rational(1), Rational(0), Rational(0),
                                           Rational(-1), Rational(-4), Rational(-4), Rational(14)};
        for (int k = 0; k <= 6; ++k)
            c.expect(zeta.coeff(k) == expect[static_cast<size_t>(k)],
                     "street zeta+ coefficient q^" + std::to_string(k));
        const std::vector<std::pair<int, Rational>> amp{
            {1, Rational(0)}, {2, Rational(-2)}, {3, Rational(-4)}, {4, Rational(7)},
            {5, Rational(22)}, {6, Rational(20)}};
        for (auto& [o, v] : amp)
            c.expect(sig.amp_at(o) == v, "street alpha+ coefficient q^" + std::to_string(o));
    }
    {
        CutSignature sig = eigen_sig(Family::DoubleFan, SignatureKind::ParallelLike, 5);
        Series mln(Var::P, 5);
        {
            std::vector<Rational> cs(6, Rational(0));
            for (auto& [o, v] : sig.head) if (o <= 5) cs[static_cast<size_t>(o)] = v;
            mln = Series(Var::P, 5, cs);
        }
        Series zeta = (-mln).exp();
        const std::vector<Rational> zexp{Rational(1), Rational(0), Rational(-1),
                                         Rational(-2), Rational(2), Rational(4)};
        for (int k = 0; k <= 5; ++k)
            c.expect(zeta.coeff(k) == zexp[static_cast<size_t>(k)],
                     "double fan zeta+ coefficient p^" + std::to_string(k));
        const std::vector<std::pair<int, Rational>> amp{
            {1, Rational(0)}, {2, Rational(0)}, {3, Rational(2)}, {4, Rational(0)},
            {5, Rational(-8)}};
        for (auto& [o, v] : amp)
            c.expect(sig.amp_at(o) == v, "double fan alpha+ coefficient p^" + std::to_string(o));
    }
}

void criterion_4() {
    auto& c = criterion(4, "polynomial-route signatures equal eigen-route signatures");
    struct Case {
        Family family;
        SignatureKind kind;
    };
    for (Case k : {Case{Family::Series, SignatureKind::SeriesLike},
                   Case{Family::Parallel, SignatureKind::ParallelLike},
                   Case{Family::K4Ladder, SignatureKind::SeriesLike},
                   Case{Family::Street3xN, SignatureKind::SeriesLike},
                   Case{Family::DoubleFan, SignatureKind::ParallelLike}}) {
        auto seq = reliability_sequence(k.family, 22);
        CutSignature a = eigen_sig(k.family, k.kind);
        CutSignature b = signature_from_polynomials({{20, seq[20]}, {21, seq[21]}, {22, seq[22]}},
                                                    k.kind, 8);
        c.expect(a.i == b.i && a.head == b.head && a.amp == b.amp,
                 std::string(family_name(k.family)) + " signature routes disagree");
    }
    CutSignature street = eigen_sig(Family::Street3xN, SignatureKind::SeriesLike);
    c.expect(street.i == 3 && street.head_at(3) == Rational(1) &&
                 street.amp_at(2) == Rational(-2) && street.amp_at(3) == Rational(-4),
             "street signature values are not {i=3, a3=1, a'2=-2, a'3=-4}");
}

void criterion_5() {
    auto& c = criterion(5, "asymptotic expansion coefficients");
    const double tol = 1e-10;
    {
        CutSignature sig = eigen_sig(Family::K4Ladder, SignatureKind::SeriesLike);
        AsymptoticExpansion e1 = moment_expansion_series_like(sig, 1, 2);
        c.expect(std::abs(e1.terms[0].coeff - gamma_fn(1.25)) < tol, "K4 m=1 leading != Gamma(5/4)");
        c.expect(e1.terms[1].prefactor == Rational(0), "K4 m=1 eta^1 bracket is not exactly 0");
        c.expect(e1.terms[2].prefactor == Rational(17, 32) &&
                     e1.terms[2].gamma_arg == Rational(3, 4),
                 "K4 m=1 eta^2 term != (17/32) Gamma(3/4)");
        c.expect(std::abs(e1.terms[2].coeff - 17.0 / 32.0 * gamma_fn(0.75)) < tol,
                 "K4 m=1 eta^2 float value");
        AsymptoticExpansion e2 = moment_expansion_series_like(sig, 2, 2);
        c.expect(std::abs(e2.terms[0].coeff - std::sqrt(M_PI) / 2) < tol,
                 "K4 m=2 leading != sqrt(pi)/2");
        c.expect(e2.terms[2].prefactor == Rational(17, 12) && e2.terms[2].exponent == Rational(1),
                 "K4 m=2 n^-1 term != 17/12");
    }
    {
        CutSignature sig = eigen_sig(Family::Street3xN, SignatureKind::SeriesLike);
        AsymptoticExpansion e1 = moment_expansion_series_like(sig, 1, 2);
        c.expect(std::abs(e1.terms[0].coeff - gamma_fn(4.0 / 3.0)) < tol,
                 "street m=1 leading != Gamma(4/3)");
        c.expect(e1.terms[1].prefactor == Rational(-5, 9) && e1.terms[1].gamma_arg == Rational(2, 3),
                 "street m=1 second term != -(5/9) Gamma(2/3)");
        c.expect(std::abs(e1.terms[1].coeff + 5.0 / 9.0 * gamma_fn(2.0 / 3.0)) < tol,
                 "street m=1 second term float value");
    }
    {
        CutSignature sig = eigen_sig(Family::DoubleFan, SignatureKind::ParallelLike);
        AsymptoticExpansion e = mttf_expansion_parallel_like(sig);
        c.expect(e.log_coeff_exact == Rational(1, 2), "double fan log coefficient != 1/2");
        c.expect(std::abs(e.const_coeff - euler_gamma_const / 2) < tol,
                 "double fan constant != C/2");
        c.expect(e.terms[0].exponent == Rational(1, 2) &&
                     std::abs(e.terms[0].coeff - std::sqrt(M_PI) / 2) < tol,
                 "double fan sqrt term != sqrt(pi)/2 n^-1/2");
    }
}

void criterion_6() {
    auto& c = criterion(6, "asymptotic-vs-exact convergence (expansions through n^-1)");
    struct Case {
        Family family;
        Rational omitted;  // first omitted exponent of the reference expansion
    };
    for (Case k : {Case{Family::K4Ladder, Rational(5, 4)}, Case{Family::Street3xN, Rational(4, 3)}}) {
        AsymptoticExpansion ref = reference_mttf_expansion(k.family);
        auto seq = reliability_sequence(k.family, 256);
        auto err_at = [&](int n) {
            double exact = exact_mttf(seq[static_cast<size_t>(n)]);
            return std::abs(ref.eval(n) - exact) / exact;
        };
        double rel50 = err_at(50);
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%s rel err at n=50 is %.4f (required < 0.02)",
                      family_name(k.family), rel50);
        c.expect(rel50 < 0.02, buf);
        const double expected_ratio = std::pow(2.0, to_double(k.omitted));
        for (int n : {16, 32, 64, 128}) {
            double e1 = err_at(n) * exact_mttf(seq[static_cast<size_t>(n)]);
            double e2 = err_at(2 * n) * exact_mttf(seq[static_cast<size_t>(2 * n)]);
            double ratio = e1 / e2;
            std::snprintf(buf, sizeof(buf),
                          "%s error ratio %.3f at n=%d vs first-omitted 2^%s = %.3f",
                          family_name(k.family), ratio, n, rational_str(k.omitted).c_str(),
                          expected_ratio);
            c.expect(ratio > 0.5 * expected_ratio && ratio < 2.0 * expected_ratio, buf);
        }
    }
}

void criterion_7() {
    auto& c = criterion(7, "generalized fan limit moments");
    double m1c = fan_limit_moment(1, 1.0, FanLimitMethod::ClosedForm).value;
    double m1q = fan_limit_moment(1, 1.0, FanLimitMethod::Quadrature).value;
    double m2c = fan_limit_moment(2, 1.0, FanLimitMethod::ClosedForm).value;
    double m2q = fan_limit_moment(2, 1.0, FanLimitMethod::Quadrature).value;
    c.expect(std::abs(m1c - 0.736400) < 1e-6, "closed-form <t>_inf != 0.736400");
    c.expect(std::abs(m1q - 0.736400) < 1e-6, "quadrature <t>_inf != 0.736400");
    c.expect(std::abs(m2c - 0.781302) < 1e-6, "closed-form <t^2>_inf != 0.781302");
    c.expect(std::abs(m2q - 0.781302) < 1e-6, "quadrature <t^2>_inf != 0.781302");
    Poly r30 = reliability_polynomial({Family::GeneralizedFan, 30});
    c.expect(std::abs(exact_mttf(r30) - m1c) < 1e-4, "fan MTTF at n=30 not within 1e-4 of the limit");
    c.expect(std::abs(to_double(exact_moment_scaled(r30, 2)) - m2c) < 1e-4,
             "fan second moment at n=30 not within 1e-4 of the limit");
}

void criterion_8() {
    auto& c = criterion(8, "weibull-equivalent surrogate");
    CutSignature sig = eigen_sig(Family::Street3xN, SignatureKind::SeriesLike);
    WeibullEquivalent w = weibull_equivalent(sig, 1);
    c.expect(w.i == 3 && w.a_i == Rational(1) && w.a_ip1 == Rational(5, 2),
             "street surrogate parameters != (1, 5/2)");

    // moment matching against the eta expansion, two orders, m = 1 and 2
    for (Family f : {Family::Street3xN, Family::K4Ladder}) {
        CutSignature s = eigen_sig(f, SignatureKind::SeriesLike);
        WeibullEquivalent wf = weibull_equivalent(s, 1);
        double a = to_double(wf.a_i), b = to_double(wf.a_ip1);
        for (int m : {1, 2}) {
            AsymptoticExpansion ex = moment_expansion_series_like(s, m, 1);
            double s0 = gamma_fn(1.0 + double(m) / s.i) * std::pow(a, -double(m) / s.i);
            double s1 = -(b / a) * (double(m) / s.i) * gamma_fn(1.0 + double(m + 1) / s.i) *
                        std::pow(a, -double(m + 1) / s.i);
            c.expect(std::abs(s0 - ex.terms[0].coeff) < 1e-10 * std::abs(s0),
                     std::string(family_name(f)) + " surrogate leading coefficient mismatch");
            c.expect(std::abs(s1 - ex.terms[1].coeff) < 1e-10 * std::max(1.0, std::abs(s1)),
                     std::string(family_name(f)) + " surrogate second coefficient mismatch");
        }
    }

    // sup-norm deviation at n = 30 on the lambda t grid [0, 2], step 0.005;
    // fixture threshold 0.07 pinned from the derived run (measured 0.0665)
    Poly r30 = reliability_sequence(Family::Street3xN, 30)[30];
    double sup = 0.0;
    for (int s = 1; s <= 400; ++s) {
        double x = 0.005 * s;
        double dev = std::abs(r30.eval_double(std::exp(-x)) - w.reliability(30, x));
        sup = std::max(sup, dev);
    }
    char buf[120];
    std::snprintf(buf, sizeof(buf), "sup-norm deviation %.4f exceeds the 0.07 fixture", sup);
    c.expect(sup < 0.07, buf);
}

void criterion_9() {
    auto& c = criterion(9, "Monte-Carlo validation");
    struct Case {
        Family family;
        int n;
    };
    const long samples = 1000000;
    for (Case k : {Case{Family::Parallel, 3}, Case{Family::K4Ladder, 4}, Case{Family::DoubleFan, 6},
                   Case{Family::Street3xN, 2}}) {
        Graph g = graph({k.family, k.n});
        double exact = exact_mttf(reliability_polynomial({k.family, k.n}));
        auto est = mc_moments(g, Exponential{1.0}, 1, samples, 20240817, 4);
        double dev = std::abs(est[0].mean - exact) / est[0].std_error;
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%s n=%d: MC mean %.6f vs exact %.6f is %.2f sigma away",
                      family_name(k.family), k.n, est[0].mean, exact, dev);
        c.expect(dev < 3.0, buf);
    }

    // bottleneck lifetimes equal the quadratic threshold scan on random graphs
    std::mt19937_64 gen(424243);
    Exponential model{1.0};
    long mismatches = 0, tested = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        std::uniform_int_distribution<int> nodes_d(2, 6), edges_d(1, 8);
        Graph g;
        g.node_count = nodes_d(gen);
        g.source = 0;
        g.target = g.node_count - 1;
        int e_count = edges_d(gen);
        std::uniform_int_distribution<int> node_d(0, g.node_count - 1);
        for (int e = 0; e < e_count; ++e) {
            int u = node_d(gen), v = node_d(gen);
            if (u != v) g.edges.emplace_back(u, v);
        }
        if (g.edges.empty()) continue;
        SampleRng draw(7777, static_cast<std::uint64_t>(trial));
        std::vector<double> life(g.edges.size());
        for (auto& t : life) t = model_chi(model, draw.next_unit());
        SampleRng replay(7777, static_cast<std::uint64_t>(trial));
        double fast = lifetime_sample(g, model, replay);
        // reference: largest draw t with source-target connected using
        // edges of lifetime >= t
        double slow = 0.0;
        {
            std::vector<double> ts = life;
            std::sort(ts.begin(), ts.end(), std::greater<>());
            for (double t : ts) {
                std::vector<int> parent(static_cast<size_t>(g.node_count));
                for (int i = 0; i < g.node_count; ++i) parent[static_cast<size_t>(i)] = i;
                std::function<int(int)> find = [&](int x) {
                    while (parent[static_cast<size_t>(x)] != x)
                        x = parent[static_cast<size_t>(x)] =
                            parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
                    return x;
                };
                for (size_t e = 0; e < g.edges.size(); ++e)
                    if (life[e] >= t)
                        parent[static_cast<size_t>(find(g.edges[e].first))] = find(g.edges[e].second);
                if (find(g.source) == find(g.target)) {
                    slow = t;
                    break;
                }
            }
        }
        ++tested;
        if (fast != slow) ++mismatches;
    }
    char buf[120];
    std::snprintf(buf, sizeof(buf), "%ld bottleneck mismatches over %ld random graphs", mismatches,
                  tested);
    c.expect(mismatches == 0 && tested > 9000, buf);
}

void criterion_10() {
    auto& c = criterion(10, "non-exponential scaling");
    // beta = 0 reduces to the exponential leading term on every series-like family
    PowerLawHazard expo{0.0, 1.0, nullptr, nullptr};
    for (Family f : {Family::Series, Family::K4Ladder, Family::Street3xN}) {
        CutSignature sig = eigen_sig(f, SignatureKind::SeriesLike);
        for (int m : {1, 2}) {
            NonexpAsymptotic red = nonexp_asymptotic_moment(sig, expo, m, 20.0);
            AsymptoticExpansion ex = moment_expansion_series_like(sig, m, 0);
            double lead = ex.terms[0].coeff * std::pow(20.0, -to_double(ex.terms[0].exponent));
            c.expect(std::abs(red.value - lead) < 1e-8 * lead,
                     std::string(family_name(f)) + " beta=0 reduction at m=" + std::to_string(m));
        }
    }

    // Weibull kappa = 2: exponent (beta+1)m/i = m/(kappa i)
    PowerLawHazard wb = std::get<PowerLawHazard>(weibull_model(1.0, 2.0));
    CutSignature street = eigen_sig(Family::Street3xN, SignatureKind::SeriesLike);
    NonexpAsymptotic st = nonexp_asymptotic_moment(street, wb, 1, 20.0);
    c.expect(std::abs(st.exponent - 1.0 / 6.0) < 1e-14, "street weibull exponent != 1/6");

    // leading-order value against direct quadrature of the exact polynomial
    // at n = 20 (the K4 ladder, whose first correction cancels)
    CutSignature k4 = eigen_sig(Family::K4Ladder, SignatureKind::SeriesLike);
    NonexpAsymptotic lead = nonexp_asymptotic_moment(k4, wb, 1, 20.0);
    Poly r20 = reliability_sequence(Family::K4Ladder, 20)[20];
    double quad = nonexp_moment(r20, wb, 1).value;
    double rel = std::abs(quad - lead.value) / quad;
    char buf[140];
    std::snprintf(buf, sizeof(buf),
                  "K4 n=20 kappa=2: leading formula %.6f vs quadrature %.6f (rel %.4f >= 0.05)",
                  lead.value, quad, rel);
    c.expect(rel < 0.05, buf);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();

    int failed = 0;
    for (const auto& c : results) {
        if (c.failures.empty()) {
            std::printf("[PASS] criterion %d: %s\n", c.id, c.title.c_str());
        } else {
            ++failed;
            std::printf("[FAIL] criterion %d: %s\n", c.id, c.title.c_str());
            for (const auto& f : c.failures) std::printf("       - %s\n", f.c_str());
        }
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed,
                results.size());
    return failed;
}
