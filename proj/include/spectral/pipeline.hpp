#pragma once

#include <cstdint>
#include <vector>

#include "spectral/distribution.hpp"
#include "spectral/graph.hpp"

namespace spectral {

// Walk-sampling spectrum estimation parameters; defaults are the standard
// protocol (10k walks of length 20, 20 averaged repetitions, grid 0.01).
struct EstimateOptions {
    std::uint64_t walks = 10000;
    int length = 20;     // walk length = number of moments
    int repeats = 20;
    double grid = 0.01;  // inversion grid spacing on [-1,1]
    std::uint64_t seed = 0;
    int threads = 0;     // 0 = auto
};

struct EstimateResult {
    SpectralDistribution distribution;  // on [0,2], averaged over repeats
    std::uint64_t neighbor_queries = 0; // exactly repeats * walks * length
    std::vector<double> objectives;     // LP residual per repeat
};

// Full estimation pipeline: per repeat, estimate moments from walks, invert
// them on the [-1,1] grid, map to the Laplacian domain; average the repeats.
// Deterministic given (g, options.seed) for any thread count.
EstimateResult estimate_spectrum(const Graph& g, const EstimateOptions& options);

} // namespace spectral
