#include "spectral/moments.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

#include "spectral/error.hpp"
#include "spectral/util.hpp"

namespace spectral {

double approx_spectral_moment(const WalkOracle& oracle, int ell, std::uint64_t s,
                              std::uint64_t seed, std::uint64_t stream_base) {
    if (ell < 1) throw DataError("walk length must be >= 1");
    if (s < 1) throw DataError("walk count must be >= 1");
    std::uint64_t returns = 0;
    for (std::uint64_t i = 0; i < s; ++i) {
        RngStream rng(seed, stream_base + i);
        Graph::VertexId start = oracle.random_vertex(rng);
        Graph::VertexId position = start;
        for (int step = 0; step < ell; ++step) position = oracle.random_neighbor(position, rng);
        if (position == start) ++returns;
    }
    return static_cast<double>(returns) / static_cast<double>(s);
}

double approx_spectral_moment(const Graph& g, int ell, std::uint64_t s, std::uint64_t seed) {
    WalkOracle oracle(g);
    return approx_spectral_moment(oracle, ell, s, seed);
}

MomentVector estimate_moments(const WalkOracle& oracle, int max_order, std::uint64_t s,
                              std::uint64_t seed, std::uint64_t stream_base, int threads) {
    if (max_order < 1) throw DataError("moment order must be >= 1");
    if (s < 1) throw DataError("walk count must be >= 1");
    const auto order = static_cast<std::size_t>(max_order);

    // Integer per-step return counts, summed over per-walk chunks, so the
    // result is identical for any worker count.
    int workers = effective_threads(threads);
    std::vector<std::vector<std::uint64_t>> counts(
        static_cast<std::size_t>(workers) > s ? s : static_cast<std::size_t>(workers),
        std::vector<std::uint64_t>(order, 0));
    parallel_chunks(s, threads, [&](std::size_t begin, std::size_t end, int worker) {
        auto& mine = counts[static_cast<std::size_t>(worker)];
        for (std::size_t i = begin; i < end; ++i) {
            RngStream rng(seed, stream_base + i);
            Graph::VertexId start = oracle.random_vertex(rng);
            Graph::VertexId position = start;
            for (std::size_t ell = 0; ell < order; ++ell) {
                position = oracle.random_neighbor(position, rng);
                if (position == start) ++mine[ell];
            }
        }
    });

    MomentVector mv;
    mv.max_order = max_order;
    mv.walks_used = s;
    mv.values.assign(order, 0.0);
    for (std::size_t ell = 0; ell < order; ++ell) {
        std::uint64_t sum = 0;
        for (const auto& chunk : counts) sum += chunk[ell];
        mv.values[ell] = static_cast<double>(sum) / static_cast<double>(s);
    }
    return mv;
}

MomentVector estimate_moments(const Graph& g, int max_order, std::uint64_t s,
                              std::uint64_t seed) {
    WalkOracle oracle(g);
    return estimate_moments(oracle, max_order, s, seed);
}

std::uint64_t required_walks(double epsilon, double delta) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw DataError("epsilon must be in (0, 1)");
    if (!(delta > 0.0 && delta < 1.0)) throw DataError("delta must be in (0, 1)");
    double bound = 0.5 * std::log(2.0 / delta) / (epsilon * epsilon);
    // Tolerate one ulp of rounding when the bound lands on an integer.
    return static_cast<std::uint64_t>(std::ceil(bound - 1e-9));
}

} // namespace spectral
