#pragma once

#include <atomic>
#include <cstdint>
#include <vector>

#include "spectral/graph.hpp"
#include "spectral/rng.hpp"

namespace spectral {

// Walk-matrix power moments, estimated or exact.
struct MomentVector {
    std::vector<double> values;    // values[ell-1] = ell-th moment
    std::uint64_t walks_used = 0;  // 0 for exact moments
    int max_order = 0;
};

// Neighbor-query surface over a Graph with an exact query counter; all walk
// sampling goes through this so query complexity is observable. Thread-safe.
class WalkOracle {
public:
    explicit WalkOracle(const Graph& g) : graph_(&g) {}

    const Graph& graph() const { return *graph_; }

    Graph::VertexId random_vertex(RngStream& rng) const {
        return spectral::random_vertex(*graph_, rng);
    }
    Graph::VertexId random_neighbor(Graph::VertexId v, RngStream& rng) const {
        neighbor_queries_.fetch_add(1, std::memory_order_relaxed);
        return spectral::random_neighbor(*graph_, v, rng);
    }

    std::uint64_t neighbor_queries() const {
        return neighbor_queries_.load(std::memory_order_relaxed);
    }

private:
    const Graph* graph_;
    mutable std::atomic<std::uint64_t> neighbor_queries_{0};
};

// One estimate of the ell-th moment from s independent ell-step walks: the
// fraction that end at their start vertex. Unbiased. Draws walk i from
// RngStream(seed, stream_base + i).
double approx_spectral_moment(const WalkOracle& oracle, int ell, std::uint64_t s,
                              std::uint64_t seed, std::uint64_t stream_base = 0);
double approx_spectral_moment(const Graph& g, int ell, std::uint64_t s, std::uint64_t seed);

// Amortized estimator: s walks of length max_order, each reporting a return
// indicator at every step, so values[ell-1] is the fraction of walks at their
// start after ell steps. Entries are individually unbiased but correlated.
// Walk i draws from RngStream(seed, stream_base + i); results are identical
// for any thread count. Costs exactly s * max_order neighbor queries.
MomentVector estimate_moments(const WalkOracle& oracle, int max_order, std::uint64_t s,
                              std::uint64_t seed, std::uint64_t stream_base = 0,
                              int threads = 0);
MomentVector estimate_moments(const Graph& g, int max_order, std::uint64_t s,
                              std::uint64_t seed);

// Walks needed so one moment estimate errs by more than epsilon with
// probability at most delta: ceil(epsilon^-2 ln(2/delta) / 2). Throws
// DataError unless 0 < epsilon < 1 and 0 < delta < 1.
std::uint64_t required_walks(double epsilon, double delta);

} // namespace spectral
