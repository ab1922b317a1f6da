#include "spectral/pipeline.hpp"

#include "spectral/error.hpp"
#include "spectral/invert.hpp"
#include "spectral/moments.hpp"

namespace spectral {

EstimateResult estimate_spectrum(const Graph& g, const EstimateOptions& options) {
    if (options.walks < 1) throw DataError("walk count must be >= 1");
    if (options.length < 1) throw DataError("walk length must be >= 1");
    if (options.repeats < 1) throw DataError("repeat count must be >= 1");

    WalkOracle oracle(g);
    GridSpec grid{-1.0, 1.0, options.grid};
    std::vector<SpectralDistribution> runs;
    EstimateResult result;
    runs.reserve(static_cast<std::size_t>(options.repeats));
    for (int r = 0; r < options.repeats; ++r) {
        // Stream ids are globally distinct across repeats and walks.
        std::uint64_t stream_base = static_cast<std::uint64_t>(r) * options.walks;
        MomentVector mv = estimate_moments(oracle, options.length, options.walks, options.seed,
                                           stream_base, options.threads);
        MomentInverseResult inv = moment_inverse(mv, grid);
        runs.push_back(walk_to_laplacian(inv.distribution));
        result.objectives.push_back(inv.objective);
    }
    result.distribution = average_distributions(runs);
    result.neighbor_queries = oracle.neighbor_queries();
    return result;
}

} // namespace spectral
