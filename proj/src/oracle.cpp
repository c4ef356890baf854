#include "relnet/oracle.hpp"

#include "relnet/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

namespace relnet {

namespace {

struct UnionFind {
    std::vector<int> parent, size;
    explicit UnionFind(int n) : parent(n), size(n, 1) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
        return true;
    }
};

inline std::uint64_t splitmix64(std::uint64_t& s) {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

Poly brute_force_polynomial(const Graph& g) {
    const int e_count = static_cast<int>(g.edges.size());
    if (e_count > 22) throw TooManyEdgesError("brute force is capped at 22 edges");
    std::vector<BigInt> connected_count(static_cast<size_t>(e_count) + 1, BigInt(0));
    UnionFind scratch(g.node_count);
    for (std::uint32_t mask = 0; mask < (1u << e_count); ++mask) {
        scratch.parent.assign(static_cast<size_t>(g.node_count), 0);
        std::iota(scratch.parent.begin(), scratch.parent.end(), 0);
        scratch.size.assign(static_cast<size_t>(g.node_count), 1);
        int up = 0;
        for (int i = 0; i < e_count; ++i)
            if (mask >> i & 1u) {
                ++up;
                scratch.merge(g.edges[static_cast<size_t>(i)].first,
                              g.edges[static_cast<size_t>(i)].second);
            }
        if (scratch.find(g.source) == scratch.find(g.target)) ++connected_count[static_cast<size_t>(up)];
    }
    // R(p) = sum_k N_k p^k (1-p)^(E-k), expanded exactly
    std::vector<Rational> coeffs(static_cast<size_t>(e_count) + 1, Rational(0));
    for (int k = 0; k <= e_count; ++k) {
        if (connected_count[static_cast<size_t>(k)] == 0) continue;
        for (int j = 0; j + k <= e_count; ++j) {
            BigInt term = connected_count[static_cast<size_t>(k)] *
                          binomial_coeff(static_cast<unsigned>(e_count - k), static_cast<unsigned>(j));
            if (j & 1) term = -term;
            coeffs[static_cast<size_t>(k + j)] += Rational(term);
        }
    }
    return Poly(Var::P, std::move(coeffs));
}

SampleRng::SampleRng(std::uint64_t seed, std::uint64_t sample_index) {
    // two mixing rounds decorrelate (seed, index) pairs
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s = a ^ (sample_index * 0xda942042e4dd58b5ULL + 0x2545f4914f6cdd1dULL);
    state_ = splitmix64(s);
}

std::uint64_t SampleRng::next_u64() { return splitmix64(state_); }

double SampleRng::next_unit() {
    // 53 significant bits, shifted into (0, 1)
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double lifetime_sample(const Graph& g, const FailureModel& model, SampleRng& rng) {
    const size_t e_count = g.edges.size();
    std::vector<double> life(e_count);
    for (size_t i = 0; i < e_count; ++i) life[i] = model_chi(model, rng.next_unit());
    std::vector<int> order(e_count);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return life[static_cast<size_t>(a)] > life[static_cast<size_t>(b)];
    });
    UnionFind uf(g.node_count);
    for (int idx : order) {
        uf.merge(g.edges[static_cast<size_t>(idx)].first, g.edges[static_cast<size_t>(idx)].second);
        if (uf.find(g.source) == uf.find(g.target)) return life[static_cast<size_t>(idx)];
    }
    return 0.0;  // unreachable for connected graphs
}

std::vector<McEstimate> mc_moments(const Graph& g, const FailureModel& model, int m_max,
                                   long n_samples, std::uint64_t seed, int threads) {
    if (n_samples < 1000) throw UnsupportedError("mc_moments needs at least 10^3 samples");
    if (m_max < 1) throw UnsupportedError("m_max must be >= 1");
    threads = std::max(1, threads);

    constexpr long kBlock = 8192;
    const long n_blocks = (n_samples + kBlock - 1) / kBlock;
    // per block, per order: sum t^m and sum t^(2m)
    std::vector<std::vector<double>> block_sums(static_cast<size_t>(n_blocks),
                                                std::vector<double>(static_cast<size_t>(2 * m_max), 0.0));

    std::atomic<long> next_block{0};
    auto worker = [&]() {
        for (;;) {
            long b = next_block.fetch_add(1);
            if (b >= n_blocks) break;
            auto& sums = block_sums[static_cast<size_t>(b)];
            const long begin = b * kBlock;
            const long end = std::min(n_samples, begin + kBlock);
            for (long i = begin; i < end; ++i) {
                SampleRng rng(seed, static_cast<std::uint64_t>(i));
                double t = lifetime_sample(g, model, rng);
                double tm = 1.0;
                for (int m = 1; m <= m_max; ++m) {
                    tm *= t;
                    sums[static_cast<size_t>(2 * (m - 1))] += tm;
                    sums[static_cast<size_t>(2 * (m - 1) + 1)] += tm * tm;
                }
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::vector<McEstimate> out;
    const double n = static_cast<double>(n_samples);
    for (int m = 1; m <= m_max; ++m) {
        double s1 = 0.0, s2 = 0.0;
        for (long b = 0; b < n_blocks; ++b) {  // fixed reduction order
            s1 += block_sums[static_cast<size_t>(b)][static_cast<size_t>(2 * (m - 1))];
            s2 += block_sums[static_cast<size_t>(b)][static_cast<size_t>(2 * (m - 1) + 1)];
        }
        McEstimate e;
        e.order = m;
        e.n_samples = n_samples;
        e.seed = seed;
        e.mean = s1 / n;
        double var = std::max(0.0, (s2 - s1 * s1 / n) / (n - 1.0));
        e.std_error = std::sqrt(var / n);
        out.push_back(e);
    }
    return out;
}

}  // namespace relnet
