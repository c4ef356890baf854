#pragma once

#include "relnet/architectures.hpp"
#include "relnet/moments.hpp"

#include <cstdint>
#include <vector>

namespace relnet {

/// Exact two-terminal reliability by enumeration of all 2^E edge states.
/// Rejects graphs with more than 22 edges.
Poly brute_force_polynomial(const Graph& g);

/// Counter-based per-sample generator: the stream for sample i depends only
/// on (seed, i), so results do not depend on worker scheduling.
class SampleRng {
public:
    SampleRng(std::uint64_t seed, std::uint64_t sample_index);
    std::uint64_t next_u64();
    double next_unit();  // uniform on (0, 1)

private:
    std::uint64_t state_;
};

/// System lifetime by bottleneck insertion: edges enter a union-find in
/// decreasing lifetime order; the draw that first merges source and target
/// is the maximin path width, i.e. the failure time.
double lifetime_sample(const Graph& g, const FailureModel& model, SampleRng& rng);

struct McEstimate {
    int order = 1;
    double mean = 0.0;
    double std_error = 0.0;
    long n_samples = 0;
    std::uint64_t seed = 0;
};

/// Sample moments of the system lifetime up to order m_max. Deterministic
/// for a fixed seed under any thread count: samples are pre-assigned to
/// fixed blocks and block sums are reduced in index order.
std::vector<McEstimate> mc_moments(const Graph& g, const FailureModel& model, int m_max,
                                   long n_samples, std::uint64_t seed, int threads = 1);

}  // namespace relnet
