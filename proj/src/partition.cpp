#include "spectral/partition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "spectral/error.hpp"
#include "spectral/util.hpp"

namespace spectral {

Partition partition_graph(const Graph& g, std::size_t max_size) {
    if (max_size < 1) throw DataError("component size cap must be >= 1");
    const std::size_t n = g.vertex_count();
    Partition part;
    part.component_of.assign(n, 0);

    std::vector<char> assigned(n, 0);
    std::vector<std::uint32_t> unassigned_deg(n, 0);
    for (Graph::VertexId v = 0; v < n; ++v)
        unassigned_deg[v] = static_cast<std::uint32_t>(g.degree(v));

    std::vector<std::uint32_t> comp_stamp(n, 0); // in-current-component marker
    std::uint32_t stamp = 0;
    std::size_t remaining = n;
    while (remaining > 0) {
        // Seed: unassigned vertex with the fewest unassigned neighbors.
        Graph::VertexId seed = 0;
        std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
        for (Graph::VertexId v = 0; v < n; ++v)
            if (!assigned[v] && unassigned_deg[v] < best) {
                best = unassigned_deg[v];
                seed = v;
            }

        ++stamp;
        std::vector<Graph::VertexId> members{seed};
        comp_stamp[seed] = stamp;
        std::vector<Graph::VertexId> frontier;
        auto extend_frontier = [&](Graph::VertexId v) {
            for (Graph::VertexId u : g.neighbors(v))
                if (!assigned[u] && comp_stamp[u] != stamp) {
                    comp_stamp[u] = stamp;
                    frontier.push_back(u);
                }
        };
        extend_frontier(seed);

        while (members.size() < max_size && !frontier.empty()) {
            // Grow toward the frontier vertex with the fewest unassigned
            // neighbors outside the component; ties go to the smallest id.
            std::size_t pick = 0;
            std::uint32_t pick_ext = std::numeric_limits<std::uint32_t>::max();
            for (std::size_t i = 0; i < frontier.size(); ++i) {
                Graph::VertexId w = frontier[i];
                std::uint32_t ext = 0;
                for (Graph::VertexId u : g.neighbors(w))
                    if (!assigned[u] && comp_stamp[u] != stamp) ++ext;
                if (ext < pick_ext || (ext == pick_ext && w < frontier[pick])) {
                    pick_ext = ext;
                    pick = i;
                }
            }
            Graph::VertexId w = frontier[pick];
            frontier[pick] = frontier.back();
            frontier.pop_back();
            members.push_back(w);
            extend_frontier(w);
        }

        auto id = static_cast<std::uint32_t>(part.components.size());
        std::sort(members.begin(), members.end());
        for (Graph::VertexId v : members) {
            assigned[v] = 1;
            part.component_of[v] = id;
            for (Graph::VertexId u : g.neighbors(v))
                if (unassigned_deg[u] > 0) --unassigned_deg[u];
        }
        remaining -= members.size();
        part.max_component_size = std::max(part.max_component_size, members.size());
        part.components.push_back(std::move(members));
    }

    for (const auto& [u, v] : g.edges())
        if (part.component_of[u] != part.component_of[v]) ++part.cut_edges;
    return part;
}

Graph remove_cut_edges(const Graph& g, const Partition& part) {
    std::vector<Graph::Edge> kept;
    for (const auto& [u, v] : g.edges())
        if (part.component_of[u] == part.component_of[v]) kept.emplace_back(u, v);
    return Graph::from_edges(g.vertex_count(), std::move(kept));
}

namespace {

// Induced subgraph on one component; equals that component of the cut graph.
Graph component_subgraph(const Graph& g, const std::vector<Graph::VertexId>& members) {
    std::vector<Graph::Edge> edges;
    for (std::size_t local = 0; local < members.size(); ++local) {
        Graph::VertexId v = members[local];
        for (Graph::VertexId u : g.neighbors(v)) {
            if (u <= v) continue;
            auto it = std::lower_bound(members.begin(), members.end(), u);
            if (it != members.end() && *it == u)
                edges.emplace_back(static_cast<Graph::VertexId>(local),
                                   static_cast<Graph::VertexId>(it - members.begin()));
        }
    }
    return Graph::from_edges(members.size(), std::move(edges));
}

} // namespace

double small_cc_spectrum_sample(const Graph& g, const Partition& part, RngStream& rng) {
    Graph::VertexId v = random_vertex(g, rng);
    const auto& members = part.components[part.component_of[v]];
    SortedSpectrum values = exact_spectrum(component_subgraph(g, members));
    return values[rng.below(values.size())];
}

ComponentSpectra::ComponentSpectra(const Graph& g, const Partition& part)
    : graph_(&g), part_(&part), memo_(part.components.size()) {}

const SortedSpectrum& ComponentSpectra::eigenvalues(std::uint32_t component) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (memo_[component]) return *memo_[component];
    }
    auto computed = std::make_unique<SortedSpectrum>(
        exact_spectrum(component_subgraph(*graph_, part_->components[component])));
    std::lock_guard<std::mutex> lock(mu_);
    if (!memo_[component]) memo_[component] = std::move(computed);
    return *memo_[component];
}

double ComponentSpectra::sample(RngStream& rng) const {
    Graph::VertexId v = random_vertex(*graph_, rng);
    const SortedSpectrum& values = eigenvalues(part_->component_of[v]);
    return values[rng.below(values.size())];
}

void ComponentSpectra::precompute(int threads) {
    parallel_chunks(part_->components.size(), threads,
                    [&](std::size_t begin, std::size_t end, int) {
                        for (std::size_t c = begin; c < end; ++c)
                            eigenvalues(static_cast<std::uint32_t>(c));
                    });
}

PartitionEstimate partition_spectrum_estimate(const Graph& g, std::size_t max_size,
                                              std::uint64_t samples, std::uint64_t seed) {
    if (samples < 1) throw DataError("sample count must be >= 1");
    PartitionEstimate est;
    est.partition = partition_graph(g, max_size);
    est.samples = samples;
    est.certified_error =
        2.0 * static_cast<double>(est.partition.cut_edges) / static_cast<double>(g.vertex_count());
    est.sampling_band = std::sqrt(std::log(2.0 / 0.05) / (2.0 * static_cast<double>(samples)));

    ComponentSpectra spectra(g, est.partition);
    spectra.precompute();
    std::vector<double> draws(samples);
    RngStream rng(seed, 0);
    // Eigenvalue roundoff can stray a few ulps outside [0, 2]; keep the
    // reported support inside the valid range.
    for (std::uint64_t i = 0; i < samples; ++i)
        draws[i] = std::clamp(spectra.sample(rng), 0.0, 2.0);
    std::sort(draws.begin(), draws.end());

    std::vector<std::pair<double, double>> atoms;
    for (std::size_t i = 0; i < draws.size();) {
        std::size_t j = i;
        while (j < draws.size() && draws[j] == draws[i]) ++j;
        atoms.emplace_back(draws[i],
                           static_cast<double>(j - i) / static_cast<double>(samples));
        i = j;
    }
    est.distribution = distribution_from_atoms(std::move(atoms));
    return est;
}

} // namespace spectral
