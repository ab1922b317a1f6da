#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spectral/rng.hpp"

namespace spectral {

// Undirected simple graph in compressed sparse row form. Vertices are dense
// ids 0..n-1; adjacency rows are sorted, self-loop free, and symmetric by
// construction. Isolated vertices are allowed.
class Graph {
public:
    using VertexId = std::uint32_t;
    using Edge = std::pair<VertexId, VertexId>;

    Graph() = default;

    // Builds from an edge set on vertices 0..n-1. Self-loops are dropped and
    // duplicate edges collapse to one.
    static Graph from_edges(std::size_t n, std::vector<Edge> edges);

    std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const { return edge_count_; }
    std::size_t degree(VertexId v) const {
        return static_cast<std::size_t>(offsets_[v + 1] - offsets_[v]);
    }
    std::size_t max_degree() const { return max_degree_; }
    std::span<const VertexId> neighbors(VertexId v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    bool has_edge(VertexId u, VertexId v) const;

    // Edges as (u, v) with u < v, ascending.
    std::vector<Edge> edges() const;

    bool operator==(const Graph& other) const = default;

private:
    std::vector<std::uint64_t> offsets_{0};
    std::vector<VertexId> adjacency_;
    std::size_t edge_count_ = 0;
    std::size_t max_degree_ = 0;
};

// Reads a whitespace-separated edge list ("u v" per line, '#' starts a
// comment). Self-loop lines register the vertex but add no edge. Sparse ids
// are compacted to 0..n-1 in first-appearance order; ids that already form
// {0..n-1} are kept as-is. Throws DataError on malformed or empty input.
Graph load_edge_list(std::istream& in);
Graph load_edge_list(const std::string& path);

// Writes edges as "u v" lines with u < v, ascending, plus a "v v" line per
// isolated vertex so reloading reproduces the graph exactly.
void save_edge_list(const Graph& g, std::ostream& out);
void save_edge_list(const Graph& g, const std::string& path);

// Generators. Sizes are validated; all throw DataError on bad parameters.
Graph generate_cycle(std::size_t n);              // n >= 3
Graph generate_path(std::size_t n);               // n >= 1
Graph generate_complete(std::size_t n);           // n >= 1
Graph generate_grid2d(std::size_t rows, std::size_t cols); // rows, cols >= 1
Graph generate_star(std::size_t leaves);          // leaves >= 1; n = leaves + 1, center id 0
// Preferential attachment: starts from a (m+1)-clique, then each new vertex
// attaches m edges to endpoints sampled from the running edge list.
Graph generate_preferential(std::size_t n, std::size_t m, std::uint64_t seed);

// Builds the named generator; kind is one of cycle, path, complete, grid2d,
// star, ba. args carries the sizes (grid2d takes two, ba takes n and m).
Graph generate(const std::string& kind, const std::vector<std::uint64_t>& args,
               std::uint64_t seed = 0);

Graph disjoint_union(const Graph& a, const Graph& b);

Graph::VertexId random_vertex(const Graph& g, RngStream& rng);
// Uniform neighbor of v; returns v itself when v is isolated.
Graph::VertexId random_neighbor(const Graph& g, Graph::VertexId v, RngStream& rng);

} // namespace spectral
