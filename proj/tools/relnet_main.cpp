// relnet: exact reliability polynomials, failure-time moments, asymptotic
// expansions and Monte-Carlo validation for recursive two-terminal networks.

#include "relnet/asymptotics.hpp"
#include "relnet/classify.hpp"
#include "relnet/errors.hpp"
#include "relnet/moments.hpp"
#include "relnet/oracle.hpp"
#include "relnet/specfun.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace relnet;

namespace {

struct OutputSink {
    std::string path;  // empty = stdout

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            if (!text.empty() && text.back() != '\n') std::cout << '\n';
            return;
        }
        std::string full = path;
        const char* dir = std::getenv("RELNET_OUTPUT_DIR");
        if (dir && *dir && full.find('/') == std::string::npos)
            full = std::string(dir) + "/" + full;
        std::ofstream os(full);
        if (!os) throw UnsupportedError("cannot open output file '" + full + "'");
        os << text;
        if (!text.empty() && text.back() != '\n') os << '\n';
    }
};

std::string join_csv(const std::vector<std::string>& cells) {
    std::string out;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ",";
        out += cells[i];
    }
    return out;
}

std::string fmt_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::vector<int> parse_order_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    if (out.empty()) throw UnsupportedError("empty order list");
    return out;
}

json config_echo(const std::string& command, const json& extra) {
    json c;
    c["command"] = command;
    for (auto& [k, v] : extra.items()) c[k] = v;
    return c;
}

// shared architecture options
struct ArchOpts {
    std::string family_name = "series";
    int n = 1;
    int k = 2;

    Architecture arch() const {
        Family f = family_from_name(family_name);
        return Architecture{f, n, f == Family::KOutOfN ? k : 0};
    }
};

void add_arch_opts(CLI::App* cmd, ArchOpts& o, bool need_n = true) {
    cmd->add_option("--family", o.family_name,
                    "architecture family: series, parallel, kofn, k4ladder, fan, doublefan, street3xn")
        ->required();
    auto* n_opt = cmd->add_option("--n", o.n, "size index n");
    if (need_n) n_opt->required();
    cmd->add_option("--k", o.k, "k for kofn systems");
}

SignatureKind kind_for(Family f) {
    switch (expected_regime(f)) {
        case Regime::SeriesLike: return SignatureKind::SeriesLike;
        case Regime::ParallelLike: return SignatureKind::ParallelLike;
        case Regime::Saturating:
            throw DegenerateRootError("saturating families carry no cut signature");
    }
    throw UnsupportedError("unhandled regime");
}

json signature_json(const CutSignature& sig) {
    const bool series = sig.kind == SignatureKind::SeriesLike;
    json j;
    j["kind"] = series ? "series-like" : "parallel-like";
    j["i"] = sig.i;
    json head, amp;
    for (const auto& [order, c] : sig.head) head[std::to_string(order)] = rational_str(c);
    for (const auto& [order, c] : sig.amp) amp[std::to_string(order)] = rational_str(c);
    j[series ? "alpha" : "beta"] = head;
    j[series ? "alpha_prime" : "beta_prime"] = amp;
    return j;
}

// ---- subcommand implementations ---------------------------------------------

int cmd_exact(const ArchOpts& o, const std::string& emit, const std::string& p_text, int grid,
              const std::string& format, const OutputSink& sink) {
    Architecture arch = o.arch();
    Poly r = reliability_polynomial(arch);
    if (emit == "coeffs") {
        std::vector<std::string> cells;
        for (int k = 0; k <= r.degree(); ++k) cells.push_back(rational_str(r.coeff(k)));
        if (r.is_zero()) cells.push_back("0");
        if (format == "json") {
            json j;
            j["config"] = config_echo("exact", {{"family", o.family_name}, {"n", o.n}});
            j["results"] = json::array({json{{"coeffs", cells}}});
            sink.write(j.dump(2));
        } else {
            std::string line;
            for (size_t i = 0; i < cells.size(); ++i) line += (i ? ", " : "") + cells[i];
            sink.write(line);
        }
        return 0;
    }
    if (emit == "value") {
        Rational p = parse_rational(p_text);
        Rational v = r.eval(p);
        if (format == "json") {
            json j;
            j["config"] = config_echo("exact", {{"family", o.family_name}, {"n", o.n}, {"p", p_text}});
            j["results"] = json::array({json{{"p", rational_str(p)},
                                             {"reliability", rational_str(v)},
                                             {"value", to_double(v)}}});
            sink.write(j.dump(2));
        } else {
            sink.write(rational_str(v) + " = " + fmt_double(to_double(v)));
        }
        return 0;
    }
    if (emit == "grid") {
        std::vector<std::array<std::string, 3>> rows;
        for (int i = 0; i <= grid; ++i) {
            Rational p(i, grid);
            Rational v = r.eval(p);
            rows.push_back({rational_str(p), rational_str(v), fmt_double(to_double(v))});
        }
        if (format == "json") {
            json results = json::array();
            for (auto& row : rows)
                results.push_back(json{{"p", row[0]}, {"reliability", row[1]}, {"value", row[2]}});
            json j;
            j["config"] = config_echo("exact", {{"family", o.family_name}, {"n", o.n}, {"grid", grid}});
            j["results"] = results;
            sink.write(j.dump(2));
        } else {
            std::string text = "p,reliability,value\n";
            for (auto& row : rows) text += join_csv({row[0], row[1], row[2]}) + "\n";
            sink.write(text);
        }
        return 0;
    }
    throw UnsupportedError("unknown emit mode '" + emit + "'");
}

int cmd_moments(const ArchOpts& o, const std::string& orders_text, double lambda, bool cumulants,
                const std::string& format, const OutputSink& sink) {
    Architecture arch = o.arch();
    Poly r = reliability_polynomial(arch);
    std::vector<int> orders = parse_order_list(orders_text);
    int m_max = *std::max_element(orders.begin(), orders.end());

    std::vector<Rational> mu;
    for (int m = 1; m <= m_max; ++m) mu.push_back(exact_moment_scaled(r, m));
    std::vector<Rational> values = cumulants ? cumulants_from_moments(mu) : mu;

    json results = json::array();
    std::string csv = cumulants ? "m,cumulant_exact,cumulant\n" : "m,moment_exact,moment\n";
    for (int m : orders) {
        if (m < 1 || m > m_max) throw UnsupportedError("order out of range");
        const Rational& scaled = values[static_cast<size_t>(m - 1)];
        double v = to_double(scaled) / std::pow(lambda, m);
        results.push_back(json{{"m", m},
                               {"exact_lambda_scaled", rational_str(scaled)},
                               {"value", v}});
        csv += join_csv({std::to_string(m), rational_str(scaled), fmt_double(v)}) + "\n";
    }
    if (format == "json") {
        json j;
        j["config"] = config_echo("moments", {{"family", o.family_name},
                                              {"n", o.n},
                                              {"lambda", lambda},
                                              {"cumulants", cumulants}});
        j["results"] = results;
        sink.write(j.dump(2));
    } else {
        sink.write(csv);
    }
    return 0;
}

int cmd_signature(const ArchOpts& o, int order, const std::string& method,
                  const std::string& format, const OutputSink& sink) {
    Architecture arch = o.arch();
    SignatureKind kind = kind_for(arch.family);
    CutSignature sig;
    if (method == "eigen") {
        sig = signature_from_eigen(eigen_data(arch), kind, order);
    } else if (method == "poly") {
        auto seq = reliability_sequence(arch.family, 22, arch.k);
        sig = signature_from_polynomials({{20, seq[20]}, {21, seq[21]}, {22, seq[22]}}, kind, order);
    } else {
        throw UnsupportedError("unknown signature method '" + method + "'");
    }
    json j = signature_json(sig);
    if (format == "csv") {
        std::string csv = "series,order,coefficient\n";
        for (const auto& [ord, c] : sig.head)
            csv += join_csv({"head", std::to_string(ord), rational_str(c)}) + "\n";
        for (const auto& [ord, c] : sig.amp)
            csv += join_csv({"amplitude", std::to_string(ord), rational_str(c)}) + "\n";
        sink.write(csv);
    } else {
        json out;
        out["config"] = config_echo("signature", {{"family", o.family_name},
                                                  {"order", order},
                                                  {"method", method}});
        for (auto& [k, v] : j.items()) out[k] = v;
        sink.write(out.dump(2));
    }
    return 0;
}

int cmd_asympt(const ArchOpts& o, int terms, int m, double lambda, const std::string& mode,
               const std::string& format, const OutputSink& sink) {
    Architecture arch = o.arch();
    Family f = arch.family;
    json j;
    j["config"] = config_echo("asympt", {{"family", o.family_name},
                                         {"n", o.n},
                                         {"m", m},
                                         {"terms", terms},
                                         {"lambda", lambda}});
    AsymptoticExpansion ex;
    if (expected_regime(f) == Regime::Saturating) {
        double v = fan_limit_moment(m, lambda, FanLimitMethod::ClosedForm).value;
        j["regime"] = "saturating";
        j["limit_value"] = v;
        j["estimate"] = v;
    } else if (expected_regime(f) == Regime::SeriesLike) {
        CutSignature sig = signature_from_eigen(eigen_data(arch), SignatureKind::SeriesLike, 8);
        ex = moment_expansion_series_like(sig, m, 2);
        j["regime"] = "series-like";
    } else {
        if (m != 1)
            throw UnsupportedError("parallel-like expansions are implemented for the MTTF (m = 1)");
        CutSignature sig = signature_from_eigen(eigen_data(arch), SignatureKind::ParallelLike, 8);
        if (mode == "exact_harmonic") {
            double v = parallel_like_mttf_value(sig, o.n, ParallelMode::ExactHarmonic) /
                       std::pow(lambda, m);
            j["regime"] = "parallel-like";
            j["estimate"] = v;
            sink.write(j.dump(2));
            return 0;
        }
        ex = mttf_expansion_parallel_like(sig);
        j["regime"] = "parallel-like";
    }
    if (!j.contains("estimate")) {
        json tj = json::array();
        if (ex.log_coeff != 0.0)
            tj.push_back(json{{"kind", "log"}, {"coefficient", ex.log_coeff}});
        if (ex.const_coeff != 0.0)
            tj.push_back(json{{"kind", "const"}, {"coefficient", ex.const_coeff}});
        for (const auto& t : ex.terms)
            tj.push_back(json{{"kind", "power"},
                              {"exponent", rational_str(t.exponent)},
                              {"prefactor", rational_str(t.prefactor)},
                              {"gamma_arg", rational_str(t.gamma_arg)},
                              {"coefficient", t.coeff}});
        j["terms"] = tj;
        j["estimate"] = ex.eval_terms(o.n, terms) / std::pow(lambda, m);
    }
    if (format == "csv") {
        sink.write("estimate\n" + fmt_double(j["estimate"].get<double>()) + "\n");
    } else {
        sink.write(j.dump(2));
    }
    return 0;
}

int cmd_compare(const ArchOpts& o, int n_min, int n_max, int terms, const std::string& mode,
                double t_max, int t_steps, const std::string& format, const OutputSink& sink) {
    Family f = family_from_name(o.family_name);
    if (mode == "weibull") {
        // surrogate reliability against the exact one on a lambda*t grid
        CutSignature sig = signature_from_eigen(eigen_data({f, 1}), SignatureKind::SeriesLike, 8);
        WeibullEquivalent w = weibull_equivalent(sig, 1);
        Poly r = reliability_polynomial({f, o.n, o.k});
        double max_dev = 0.0;
        json rows = json::array();
        std::string csv = "lambda_t,exact,surrogate,abs_err\n";
        for (int s = 0; s <= t_steps; ++s) {
            double x = t_max * s / t_steps;
            double exact = r.eval_double(std::exp(-x));
            double approx = w.reliability(o.n, x);
            double err = std::abs(exact - approx);
            max_dev = std::max(max_dev, err);
            rows.push_back(json{{"lambda_t", x}, {"exact", exact}, {"surrogate", approx}, {"abs_err", err}});
            csv += join_csv({fmt_double(x), fmt_double(exact), fmt_double(approx), fmt_double(err)}) + "\n";
        }
        if (format == "json") {
            json j;
            j["config"] = config_echo("compare", {{"family", o.family_name},
                                                  {"n", o.n},
                                                  {"mode", mode}});
            j["results"] = rows;
            j["max_abs_dev"] = max_dev;
            sink.write(j.dump(2));
        } else {
            csv += join_csv({"max_abs_dev", fmt_double(max_dev), "", ""}) + "\n";
            sink.write(csv);
        }
        return 0;
    }

    AsymptoticExpansion ref = reference_mttf_expansion(f);
    auto seq = reliability_sequence(f, n_max, o.k);
    json rows = json::array();
    std::string csv = "n,exact,asymptotic,abs_err,rel_err\n";
    for (int n = n_min; n <= n_max; ++n) {
        double exact = to_double(exact_moment_scaled(seq[static_cast<size_t>(n)], 1));
        double approx = ref.eval_terms(n, terms);
        double abs_err = std::abs(exact - approx);
        double rel_err = abs_err / exact;
        rows.push_back(json{{"n", n},
                            {"exact", exact},
                            {"asymptotic", approx},
                            {"abs_err", abs_err},
                            {"rel_err", rel_err}});
        csv += join_csv({std::to_string(n), fmt_double(exact), fmt_double(approx),
                         fmt_double(abs_err), fmt_double(rel_err)}) + "\n";
    }
    if (format == "json") {
        json j;
        j["config"] = config_echo("compare", {{"family", o.family_name},
                                              {"n_min", n_min},
                                              {"n_max", n_max},
                                              {"terms", terms}});
        j["results"] = rows;
        sink.write(j.dump(2));
    } else {
        sink.write(csv);
    }
    return 0;
}

int cmd_simulate(const ArchOpts& o, long samples, std::uint64_t seed, const std::string& orders,
                 double lambda, double kappa, int threads, const std::string& format,
                 const OutputSink& sink) {
    Architecture arch = o.arch();
    Graph g = graph(arch);
    FailureModel model;
    if (kappa == 1.0)
        model = Exponential{lambda};
    else
        model = weibull_model(lambda, kappa);
    std::vector<int> morders = parse_order_list(orders);
    int m_max = *std::max_element(morders.begin(), morders.end());
    auto est = mc_moments(g, model, m_max, samples, seed, threads);

    json results = json::array();
    std::string csv = "m,mean,std_error,n_samples,seed\n";
    for (int m : morders) {
        const McEstimate& e = est[static_cast<size_t>(m - 1)];
        results.push_back(json{{"m", e.order},
                               {"mean", e.mean},
                               {"std_error", e.std_error},
                               {"n_samples", e.n_samples},
                               {"seed", e.seed}});
        csv += join_csv({std::to_string(e.order), fmt_double(e.mean), fmt_double(e.std_error),
                         std::to_string(e.n_samples), std::to_string(e.seed)}) + "\n";
    }
    if (format == "csv") {
        sink.write(csv);
    } else {
        json j;
        j["config"] = config_echo("simulate", {{"family", o.family_name},
                                               {"n", o.n},
                                               {"samples", samples},
                                               {"seed", seed},
                                               {"lambda", lambda},
                                               {"kappa", kappa},
                                               {"threads", threads}});
        j["results"] = results;
        sink.write(j.dump(2));
    }
    return 0;
}

int cmd_classify(const ArchOpts& o, const std::string& format, const OutputSink& sink) {
    Family f = family_from_name(o.family_name);
    RegimeLabel label = classify(f, o.k);
    json j;
    j["config"] = config_echo("classify", {{"family", o.family_name}});
    j["regime"] = regime_name(label.regime);
    if (label.r_infinity) {
        j["r_infinity_num"] = label.r_infinity->num.str();
        j["r_infinity_den"] = label.r_infinity->den.str();
        j["r_infinity_at_half"] = rational_str(label.r_infinity->eval(Rational(1, 2)));
    }
    if (format == "csv")
        sink.write(std::string("family,regime\n") + o.family_name + "," + regime_name(label.regime) + "\n");
    else
        sink.write(j.dump(2));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "relnet: exact two-terminal reliability polynomials, failure-time moments and "
        "asymptotics for recursive network families"};
    app.require_subcommand(1);

    // exact ------------------------------------------------------------------
    ArchOpts exact_opts;
    std::string exact_emit = "coeffs", exact_p = "1/2", exact_format = "csv", exact_out;
    int exact_grid = 20;
    auto* exact = app.add_subcommand(
        "exact", "exact reliability polynomial R_n(p): coefficient list or values");
    add_arch_opts(exact, exact_opts);
    exact->add_option("--emit", exact_emit, "coeffs | value | grid");
    exact->add_option("--p", exact_p, "evaluation point, rational 'a/b' or decimal");
    exact->add_option("--grid", exact_grid, "number of grid intervals on [0,1]");
    exact->add_option("--format", exact_format, "csv | json");
    exact->add_option("--output", exact_out, "output file (default stdout)");
    exact->callback([&] {
        if (!exact->get_option("--p")->empty()) exact_emit = "value";
        cmd_exact(exact_opts, exact_emit, exact_p, exact_grid, exact_format, {exact_out});
    });

    // moments ----------------------------------------------------------------
    ArchOpts mom_opts;
    std::string mom_orders = "1", mom_format = "csv", mom_out;
    double mom_lambda = 1.0;
    bool mom_cum = false;
    auto* mom = app.add_subcommand(
        "moments",
        "exact moments lambda^m <t^m> = m! sum_k c_k k^-m (and cumulants) from the "
        "reliability polynomial under exponential components");
    add_arch_opts(mom, mom_opts);
    mom->add_option("--m", mom_orders, "comma-separated moment orders, e.g. 1,2");
    mom->add_option("--lambda", mom_lambda, "component failure rate");
    mom->add_flag("--cumulants", mom_cum, "emit cumulants instead of raw moments");
    mom->add_option("--format", mom_format, "csv | json");
    mom->add_option("--output", mom_out, "output file (default stdout)");
    mom->callback([&] { cmd_moments(mom_opts, mom_orders, mom_lambda, mom_cum, mom_format, {mom_out}); });

    // signature ----------------------------------------------------------------
    ArchOpts sig_opts;
    int sig_order = 8;
    std::string sig_method = "eigen", sig_format = "json", sig_out;
    auto* sig = app.add_subcommand(
        "signature",
        "cut signature: expansion of -ln zeta+ and alpha+ near the relevant endpoint "
        "(q = 1-p for series-like, p for parallel-like families)");
    add_arch_opts(sig, sig_opts, false);
    sig->add_option("--order", sig_order, "truncation order");
    sig->add_option("--method", sig_method, "eigen | poly (log-differencing of exact polynomials)");
    sig->add_option("--format", sig_format, "csv | json");
    sig->add_option("--output", sig_out, "output file (default stdout)");
    sig->callback([&] { cmd_signature(sig_opts, sig_order, sig_method, sig_format, {sig_out}); });

    // asympt ---------------------------------------------------------------
    ArchOpts asy_opts;
    int asy_terms = 3, asy_m = 1;
    double asy_lambda = 1.0;
    std::string asy_mode = "asymptotic", asy_format = "json", asy_out;
    auto* asy = app.add_subcommand(
        "asympt",
        "asymptotic moment estimates: series-like eta-bracket expansion in powers of "
        "(n alpha_i)^(-1/i); parallel-like (1/i)(ln(beta_i n)+C) + correction");
    add_arch_opts(asy, asy_opts);
    asy->add_option("--terms", asy_terms, "number of power terms kept");
    asy->add_option("--m", asy_m, "moment order");
    asy->add_option("--lambda", asy_lambda, "component failure rate");
    asy->add_option("--mode", asy_mode, "asymptotic | exact_harmonic (parallel-like only)");
    asy->add_option("--format", asy_format, "csv | json");
    asy->add_option("--output", asy_out, "output file (default stdout)");
    asy->callback(
        [&] { cmd_asympt(asy_opts, asy_terms, asy_m, asy_lambda, asy_mode, asy_format, {asy_out}); });

    // compare ------------------------------------------------------------------
    ArchOpts cmp_opts;
    int cmp_nmin = 2, cmp_nmax = 100, cmp_terms = 3, cmp_tsteps = 300;
    double cmp_tmax = 1.5;
    std::string cmp_mode = "mttf", cmp_format = "csv", cmp_out;
    auto* cmp = app.add_subcommand(
        "compare", "exact-vs-asymptotic MTTF table, or exact-vs-surrogate reliability curves");
    add_arch_opts(cmp, cmp_opts, false);
    cmp->add_option("--n-min", cmp_nmin, "first size");
    cmp->add_option("--n-max", cmp_nmax, "last size");
    cmp->add_option("--terms", cmp_terms, "number of asymptotic terms");
    cmp->add_option("--mode", cmp_mode, "mttf | weibull (surrogate reliability at size n)");
    cmp->add_option("--t-max", cmp_tmax, "lambda*t upper bound for weibull mode");
    cmp->add_option("--t-steps", cmp_tsteps, "grid steps for weibull mode");
    cmp->add_option("--format", cmp_format, "csv | json");
    cmp->add_option("--output", cmp_out, "output file (default stdout)");
    cmp->callback([&] {
        cmd_compare(cmp_opts, cmp_nmin, cmp_nmax, cmp_terms, cmp_mode, cmp_tmax, cmp_tsteps,
                    cmp_format, {cmp_out});
    });

    // simulate ------------------------------------------------------------------
    ArchOpts sim_opts;
    long sim_samples = 100000;
    std::uint64_t sim_seed = 1;
    std::string sim_orders = "1", sim_format = "json", sim_out;
    double sim_lambda = 1.0, sim_kappa = 1.0;
    int sim_threads = 1;
    auto* sim = app.add_subcommand(
        "simulate",
        "Monte-Carlo lifetime moments via bottleneck connectivity (reproducible by seed)");
    add_arch_opts(sim, sim_opts);
    sim->add_option("--samples", sim_samples, "number of samples (>= 1000)");
    sim->add_option("--seed", sim_seed, "RNG seed");
    sim->add_option("--m", sim_orders, "comma-separated moment orders");
    sim->add_option("--lambda", sim_lambda, "component failure rate");
    sim->add_option("--kappa", sim_kappa, "Weibull shape (1 = exponential)");
    sim->add_option("--threads", sim_threads, "worker threads (does not change results)");
    sim->add_option("--format", sim_format, "csv | json");
    sim->add_option("--output", sim_out, "output file (default stdout)");
    sim->callback([&] {
        cmd_simulate(sim_opts, sim_samples, sim_seed, sim_orders, sim_lambda, sim_kappa,
                     sim_threads, sim_format, {sim_out});
    });

    // classify -------------------------------------------------------------------
    ArchOpts cls_opts;
    std::string cls_format = "json", cls_out;
    auto* cls = app.add_subcommand(
        "classify",
        "asymptotic regime: series-like (R_n -> 0), parallel-like (R_n -> 1) or "
        "saturating (interior limit), decided on exact R_n(1/2) samples");
    add_arch_opts(cls, cls_opts, false);
    cls->add_option("--format", cls_format, "csv | json");
    cls->add_option("--output", cls_out, "output file (default stdout)");
    cls->callback([&] { cmd_classify(cls_opts, cls_format, {cls_out}); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
