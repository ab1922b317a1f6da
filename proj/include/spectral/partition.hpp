#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "spectral/distribution.hpp"
#include "spectral/exact.hpp"
#include "spectral/graph.hpp"
#include "spectral/rng.hpp"

namespace spectral {

struct Partition {
    std::vector<std::uint32_t> component_of;               // vertex -> component id
    std::vector<std::vector<Graph::VertexId>> components;  // sorted vertex lists
    std::uint64_t cut_edges = 0;
    std::size_t max_component_size = 0;
};

// Deterministic greedy partitioner: repeatedly seed a component at the
// unassigned vertex with the fewest unassigned neighbors and grow it,
// preferring the frontier vertex with the fewest unassigned external
// neighbors, until it reaches max_size. Components are connected, sizes are
// capped, and cut_edges is an exact recount. Throws DataError if max_size < 1.
Partition partition_graph(const Graph& g, std::size_t max_size);

// Copy of g with every edge crossing the partition removed.
Graph remove_cut_edges(const Graph& g, const Partition& part);

// One draw of the partitioned graph's spectral distribution: uniform vertex,
// eigensolve its component in isolation, uniform eigenvalue. Each of the cut
// graph's n eigenvalues has probability exactly 1/n. Eigensolves the chosen
// component per call; use ComponentSpectra for bulk sampling.
double small_cc_spectrum_sample(const Graph& g, const Partition& part, RngStream& rng);

// Memoized per-component spectra of the cut graph; one eigensolve per
// component, safe under concurrent lookup. Holds references to g and part.
class ComponentSpectra {
public:
    ComponentSpectra(const Graph& g, const Partition& part);

    const SortedSpectrum& eigenvalues(std::uint32_t component) const;
    double sample(RngStream& rng) const; // same draw as small_cc_spectrum_sample
    void precompute(int threads = 0);

private:
    const Graph* graph_;
    const Partition* part_;
    mutable std::mutex mu_;
    mutable std::vector<std::unique_ptr<SortedSpectrum>> memo_;
};

struct PartitionEstimate {
    Partition partition;
    SpectralDistribution distribution; // empirical over `samples` draws
    double certified_error = 0.0;      // 2 * cut_edges / n, a W1 bound vs. the uncut graph
    double sampling_band = 0.0;        // sqrt(ln(2/0.05) / (2 * samples))
    std::uint64_t samples = 0;
};

// Partition, then sample the cut graph's spectrum. The certificate bounds the
// W1 error introduced by cutting; sampling error is reported separately.
// Throws DataError if samples < 1 or a component exceeds the dense limit.
PartitionEstimate partition_spectrum_estimate(const Graph& g, std::size_t max_size,
                                              std::uint64_t samples, std::uint64_t seed);

} // namespace spectral
