#include "relnet/architectures.hpp"
#include "relnet/errors.hpp"
#include "relnet/oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

using namespace relnet;

namespace {

Poly pp(std::initializer_list<long> c) { return Poly(Var::P, c); }

// reference lifetime: scan the distinct draw values from above and return
// the largest threshold at which source and target stay connected
double reference_lifetime(const Graph& g, const std::vector<double>& life) {
    std::vector<double> thresholds = life;
    std::sort(thresholds.begin(), thresholds.end(), std::greater<>());
    for (double t : thresholds) {
        // edges alive at time just below t: lifetime >= t
        std::vector<int> parent(static_cast<size_t>(g.node_count));
        for (int i = 0; i < g.node_count; ++i) parent[static_cast<size_t>(i)] = i;
        std::function<int(int)> find = [&](int x) {
            while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            return x;
        };
        for (size_t e = 0; e < g.edges.size(); ++e)
            if (life[e] >= t) parent[static_cast<size_t>(find(g.edges[e].first))] = find(g.edges[e].second);
        if (find(g.source) == find(g.target)) return t;
    }
    return 0.0;
}

}  // namespace

TEST_CASE("brute force on pinned small graphs") {
    Graph single{2, {{0, 1}}, 0, 1};
    CHECK(brute_force_polynomial(single) == pp({0, 1}));

    // Wheatstone bridge: K4 minus the direct source-target edge
    Graph k4 = graph({Family::K4Ladder, 1});
    Graph bridge = k4;
    bridge.edges.clear();
    for (auto e : k4.edges)
        if (!(e.first == k4.source && e.second == k4.target) &&
            !(e.second == k4.source && e.first == k4.target))
            bridge.edges.push_back(e);
    REQUIRE(bridge.edges.size() == 5);
    CHECK(brute_force_polynomial(bridge) == pp({0, 0, 2, 2, -5, 2}));
}

TEST_CASE("brute force edge cap") {
    Graph g{2, {}, 0, 1};
    for (int i = 0; i < 23; ++i) g.edges.emplace_back(0, 1);
    CHECK_THROWS_AS(brute_force_polynomial(g), TooManyEdgesError);
}

TEST_CASE("bottleneck lifetime on pinned paths") {
    Exponential model{1.0};
    // 2-edge series path: min of the two draws
    Graph path{3, {{0, 1}, {1, 2}}, 0, 2};
    Graph pair{2, {{0, 1}, {0, 1}}, 0, 1};
    for (std::uint64_t s = 0; s < 64; ++s) {
        SampleRng r1(7, s), r2(7, s);
        double t_path = lifetime_sample(path, model, r1);
        SampleRng probe(7, s);
        double a = -std::log(probe.next_unit());
        double b = -std::log(probe.next_unit());
        CHECK(t_path == doctest::Approx(std::min(a, b)).epsilon(1e-14));
        double t_pair = lifetime_sample(pair, model, r2);
        CHECK(t_pair == doctest::Approx(std::max(a, b)).epsilon(1e-14));
    }
}

TEST_CASE("bottleneck equals the maximin path width on the triangle fan") {
    // lifetimes: direct edge 3.0, hub edges 1.0 and 2.0 -> failure at 3.0
    Graph fan = graph({Family::GeneralizedFan, 1});
    // order: (S0,S1), (T,S0), (T,S1)
    std::vector<double> life{3.0, 1.0, 2.0};
    CHECK(reference_lifetime(fan, life) == 3.0);
    std::vector<double> life2{0.5, 1.0, 2.0};
    CHECK(reference_lifetime(fan, life2) == 1.0);  // through the hub
}

TEST_CASE("bottleneck algorithm equals the quadratic reference on random graphs") {
    std::mt19937_64 gen(123457);
    Exponential model{1.0};
    int checked = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        std::uniform_int_distribution<int> nodes_d(2, 6), edges_d(1, 8);
        int nodes = nodes_d(gen);
        int n_edges = edges_d(gen);
        Graph g;
        g.node_count = nodes;
        g.source = 0;
        g.target = nodes - 1;
        std::uniform_int_distribution<int> node_d(0, nodes - 1);
        for (int e = 0; e < n_edges; ++e) {
            int u = node_d(gen), v = node_d(gen);
            if (u == v) continue;
            g.edges.emplace_back(u, v);
        }
        if (g.edges.empty()) continue;
        // draw one lifetime vector, compare both algorithms
        SampleRng rng(99, static_cast<std::uint64_t>(trial));
        std::vector<double> life(g.edges.size());
        for (auto& t : life) t = model_chi(model, rng.next_unit());
        SampleRng replay(99, static_cast<std::uint64_t>(trial));
        double fast = lifetime_sample(g, model, replay);
        double slow = reference_lifetime(g, life);
        CHECK(fast == slow);
        ++checked;
    }
    CHECK(checked > 9000);
}

TEST_CASE("monotone coupling: an extra edge never shortens the lifetime") {
    Exponential model{1.0};
    Graph base = graph({Family::Street3xN, 1});
    for (std::uint64_t s = 0; s < 500; ++s) {
        SampleRng r1(11, s);
        std::vector<double> life(base.edges.size() + 1);
        for (auto& t : life) t = model_chi(model, r1.next_unit());
        std::vector<double> base_life(life.begin(), life.end() - 1);
        Graph more = base;
        more.edges.emplace_back(base.source, base.target);
        CHECK(reference_lifetime(more, life) >= reference_lifetime(base, base_life));
    }
}

TEST_CASE("mc_moments is reproducible and thread-count independent") {
    Graph g = graph({Family::DoubleFan, 2});
    Exponential model{1.0};
    auto a = mc_moments(g, model, 2, 20000, 42, 1);
    auto b = mc_moments(g, model, 2, 20000, 42, 4);
    REQUIRE(a.size() == 2);
    CHECK(a[0].mean == b[0].mean);
    CHECK(a[1].mean == b[1].mean);
    CHECK(a[0].std_error == b[0].std_error);
    auto c = mc_moments(g, model, 2, 20000, 43, 1);
    CHECK(a[0].mean != c[0].mean);
}

TEST_CASE("mc mean of a single exponential edge") {
    Graph single{2, {{0, 1}}, 0, 1};
    auto est = mc_moments(single, Exponential{1.0}, 1, 200000, 7, 2);
    CHECK(std::abs(est[0].mean - 1.0) < 3 * est[0].std_error);
}

TEST_CASE("empirical survival matches R(e^-t) within DKW bands") {
    // confidence 0.999 band for 1e5 samples
    const long n = 100000;
    Graph g = graph({Family::DoubleFan, 2});
    Poly r = reliability_polynomial({Family::DoubleFan, 2});
    Exponential model{1.0};
    std::vector<double> lives(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) {
        SampleRng rng(2024, static_cast<std::uint64_t>(i));
        lives[static_cast<size_t>(i)] = lifetime_sample(g, model, rng);
    }
    std::sort(lives.begin(), lives.end());
    const double eps = std::sqrt(std::log(2.0 / 0.001) / (2.0 * n));
    double worst = 0.0;
    for (long i = 0; i < n; ++i) {
        double t = lives[static_cast<size_t>(i)];
        double s = r.eval_double(std::exp(-t));
        double emp_hi = 1.0 - static_cast<double>(i) / n;        // S just below t
        double emp_lo = 1.0 - static_cast<double>(i + 1) / n;    // S at t
        worst = std::max({worst, std::abs(s - emp_hi), std::abs(s - emp_lo)});
    }
    CHECK(worst < eps);
}
