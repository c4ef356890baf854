#include "relnet/asymptotics.hpp"
#include "relnet/classify.hpp"
#include "relnet/errors.hpp"
#include "relnet/moments.hpp"
#include "relnet/oracle.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace relnet;

namespace {

Architecture make_arch(const std::string& family, int n, int k) {
    Family f = family_from_name(family);
    return Architecture{f, n, f == Family::KOutOfN ? k : 0};
}

std::vector<std::string> coeff_strings(const Poly& p) {
    std::vector<std::string> out;
    for (int k = 0; k <= p.degree(); ++k) out.push_back(rational_str(p.coeff(k)));
    if (p.is_zero()) out.push_back("0");
    return out;
}

py::dict signature_dict(const CutSignature& sig) {
    py::dict head, amp;
    for (const auto& [o, c] : sig.head) head[py::int_(o)] = rational_str(c);
    for (const auto& [o, c] : sig.amp) amp[py::int_(o)] = rational_str(c);
    py::dict out;
    out["kind"] = sig.kind == SignatureKind::SeriesLike ? "series-like" : "parallel-like";
    out["i"] = sig.i;
    out["head"] = head;
    out["amplitude"] = amp;
    return out;
}

CutSignature family_signature(const std::string& family, int order) {
    Family f = family_from_name(family);
    SignatureKind kind = expected_regime(f) == Regime::ParallelLike ? SignatureKind::ParallelLike
                                                                    : SignatureKind::SeriesLike;
    return signature_from_eigen(eigen_data({f, 1}), kind, order);
}

FailureModel make_model(double lambda, double kappa) {
    if (kappa == 1.0) return Exponential{lambda};
    return weibull_model(lambda, kappa);
}

}  // namespace

PYBIND11_MODULE(_relnet, m) {
    m.doc() = "Exact two-terminal reliability polynomials, moments and asymptotics "
              "for recursive network families";

    py::register_exception<Error>(m, "RelnetError");

    m.def(
        "reliability_coeffs",
        [](const std::string& family, int n, int k) {
            return coeff_strings(reliability_polynomial(make_arch(family, n, k)));
        },
        py::arg("family"), py::arg("n"), py::arg("k") = 2,
        "Exact coefficients of R_n(p), ascending powers, as rational strings.");

    m.def(
        "reliability_at",
        [](const std::string& family, int n, const std::string& p, int k) {
            Rational v = reliability_polynomial(make_arch(family, n, k)).eval(parse_rational(p));
            return py::make_tuple(rational_str(v), to_double(v));
        },
        py::arg("family"), py::arg("n"), py::arg("p"), py::arg("k") = 2,
        "Evaluate R_n at a rational p; returns (exact string, float).");

    m.def(
        "moment",
        [](const std::string& family, int n, int order, double lambda, int k) {
            MomentResult r = exact_moment(reliability_polynomial(make_arch(family, n, k)), order,
                                          lambda);
            py::dict out;
            out["m"] = r.order;
            out["exact_lambda_scaled"] = rational_str(*r.exact);
            out["value"] = r.value;
            return out;
        },
        py::arg("family"), py::arg("n"), py::arg("m") = 1, py::arg("lambda_") = 1.0,
        py::arg("k") = 2, "Exact moment <t^m> under exponential components.");

    m.def(
        "cumulants",
        [](const std::string& family, int n, int m_max, int k) {
            Poly r = reliability_polynomial(make_arch(family, n, k));
            std::vector<Rational> mu;
            for (int m = 1; m <= m_max; ++m) mu.push_back(exact_moment_scaled(r, m));
            std::vector<std::string> out;
            for (const Rational& c : cumulants_from_moments(mu)) out.push_back(rational_str(c));
            return out;
        },
        py::arg("family"), py::arg("n"), py::arg("m_max") = 2, py::arg("k") = 2,
        "lambda^m-scaled cumulants kappa_1..kappa_m_max as rational strings.");

    m.def(
        "kn_cumulant",
        [](int k, int n, int m) { return rational_str(kn_cumulant_scaled(k, n, m)); },
        py::arg("k"), py::arg("n"), py::arg("m"),
        "Exact (m-1)! sum_{i=k}^n i^-m for the k-out-of-n system.");

    m.def(
        "mgf",
        [](const std::string& family, int n, double z, double lambda, int k) {
            return mgf_value(reliability_polynomial(make_arch(family, n, k)), z, lambda);
        },
        py::arg("family"), py::arg("n"), py::arg("z"), py::arg("lambda_") = 1.0, py::arg("k") = 2,
        "Moment generating function <e^{z t}>.");

    m.def(
        "fan_limit_moment",
        [](int m, double lambda, const std::string& method) {
            FanLimitMethod fm = method == "quadrature" ? FanLimitMethod::Quadrature
                                                       : FanLimitMethod::ClosedForm;
            return fan_limit_moment(m, lambda, fm).value;
        },
        py::arg("m") = 1, py::arg("lambda_") = 1.0, py::arg("method") = "closed_form",
        "Limiting generalized-fan moment <t^m>_inf.");

    m.def(
        "signature",
        [](const std::string& family, int order) {
            return signature_dict(family_signature(family, order));
        },
        py::arg("family"), py::arg("order") = 8,
        "Cut signature from the recursion eigen data.");

    m.def(
        "signature_from_sizes",
        [](const std::string& family, const std::vector<int>& sizes, int order) {
            Family f = family_from_name(family);
            SignatureKind kind = expected_regime(f) == Regime::ParallelLike
                                     ? SignatureKind::ParallelLike
                                     : SignatureKind::SeriesLike;
            int n_max = *std::max_element(sizes.begin(), sizes.end());
            auto seq = reliability_sequence(f, n_max);
            std::vector<std::pair<int, Poly>> polys;
            for (int n : sizes) polys.emplace_back(n, seq[static_cast<size_t>(n)]);
            return signature_dict(signature_from_polynomials(polys, kind, order));
        },
        py::arg("family"), py::arg("sizes"), py::arg("order") = 8,
        "Cut signature recovered from exact polynomials at the given sizes.");

    m.def(
        "expansion_terms",
        [](const std::string& family, int m) {
            CutSignature sig = family_signature(family, 8);
            py::list out;
            if (sig.kind == SignatureKind::SeriesLike) {
                for (const auto& t : moment_expansion_series_like(sig, m, 2).terms)
                    out.append(py::make_tuple(to_double(t.exponent), t.coeff,
                                              rational_str(t.prefactor), rational_str(t.gamma_arg)));
            } else {
                AsymptoticExpansion e = mttf_expansion_parallel_like(sig);
                out.append(py::make_tuple("log", e.log_coeff, rational_str(e.log_coeff_exact), ""));
                out.append(py::make_tuple("const", e.const_coeff, "", ""));
                for (const auto& t : e.terms)
                    out.append(py::make_tuple(to_double(t.exponent), t.coeff,
                                              rational_str(t.prefactor), rational_str(t.gamma_arg)));
            }
            return out;
        },
        py::arg("family"), py::arg("m") = 1,
        "Asymptotic expansion terms (exponent, coefficient, prefactor, gamma argument).");

    m.def(
        "asymptotic_mttf",
        [](const std::string& family, double n, int terms) {
            return reference_mttf_expansion(family_from_name(family)).eval_terms(n, terms);
        },
        py::arg("family"), py::arg("n"), py::arg("terms") = 3,
        "Reference MTTF expansion evaluated at size n (lambda = 1).");

    m.def(
        "cv_limit", [](int i) { return coefficient_of_variation_limit(i); }, py::arg("i"),
        "Limiting coefficient of variation for a series-like family with cut order i.");

    m.def(
        "weibull_equivalent",
        [](const std::string& family, int order) {
            WeibullEquivalent w = weibull_equivalent(family_signature(family, 8), order);
            py::dict out;
            out["i"] = w.i;
            out["a_i"] = rational_str(w.a_i);
            out["order"] = w.order;
            if (order >= 1) out["a_ip1"] = rational_str(w.a_ip1);
            return out;
        },
        py::arg("family"), py::arg("order") = 1,
        "Weibull-equivalent surrogate parameters.");

    m.def(
        "classify",
        [](const std::string& family, int k) {
            RegimeLabel label = classify(family_from_name(family), k);
            py::dict out;
            out["regime"] = regime_name(label.regime);
            if (label.r_infinity)
                out["r_infinity_at_half"] = rational_str(label.r_infinity->eval(Rational(1, 2)));
            return out;
        },
        py::arg("family"), py::arg("k") = 2, "Asymptotic regime of the family.");

    m.def(
        "brute_force_coeffs",
        [](const std::string& family, int n, int k) {
            return coeff_strings(brute_force_polynomial(graph(make_arch(family, n, k))));
        },
        py::arg("family"), py::arg("n"), py::arg("k") = 2,
        "Exact coefficients by enumeration over the graph realization (<= 22 edges).");

    m.def(
        "graph_info",
        [](const std::string& family, int n, int k) {
            Graph g = graph(make_arch(family, n, k));
            py::dict out;
            out["nodes"] = g.node_count;
            out["edges"] = g.edges;
            out["source"] = g.source;
            out["target"] = g.target;
            return out;
        },
        py::arg("family"), py::arg("n"), py::arg("k") = 2, "Graph realization of the family.");

    m.def(
        "mc_moments",
        [](const std::string& family, int n, long samples, std::uint64_t seed, int m_max,
           double lambda, double kappa, int threads, int k) {
            Graph g = graph(make_arch(family, n, k));
            auto est = mc_moments(g, make_model(lambda, kappa), m_max, samples, seed, threads);
            py::list out;
            for (const auto& e : est) {
                py::dict d;
                d["m"] = e.order;
                d["mean"] = e.mean;
                d["std_error"] = e.std_error;
                d["n_samples"] = e.n_samples;
                d["seed"] = e.seed;
                out.append(d);
            }
            return out;
        },
        py::arg("family"), py::arg("n"), py::arg("samples") = 100000, py::arg("seed") = 1,
        py::arg("m_max") = 1, py::arg("lambda_") = 1.0, py::arg("kappa") = 1.0,
        py::arg("threads") = 1, py::arg("k") = 2,
        "Monte-Carlo lifetime moments (reproducible by seed, thread-count independent).");

    m.def(
        "nonexp_moment",
        [](const std::string& family, int n, int m, double lambda, double kappa, int k) {
            Poly r = reliability_polynomial(make_arch(family, n, k));
            return nonexp_moment(r, make_model(lambda, kappa), m).value;
        },
        py::arg("family"), py::arg("n"), py::arg("m") = 1, py::arg("lambda_") = 1.0,
        py::arg("kappa") = 2.0, py::arg("k") = 2,
        "Moment under a Weibull component model by adaptive quadrature.");
}
