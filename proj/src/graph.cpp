#include "spectral/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>

#include "spectral/error.hpp"

namespace spectral {

Graph Graph::from_edges(std::size_t n, std::vector<Edge> edges) {
    for (auto& [u, v] : edges) {
        if (u >= n || v >= n)
            throw DataError("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::erase_if(edges, [](const Edge& e) { return e.first == e.second; });
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Graph g;
    g.offsets_.assign(n + 1, 0);
    for (const auto& [u, v] : edges) {
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
    g.adjacency_.resize(g.offsets_[n]);
    std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        g.adjacency_[cursor[u]++] = v;
        g.adjacency_[cursor[v]++] = u;
    }
    for (std::size_t v = 0; v < n; ++v) {
        auto begin = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
        auto end = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
        std::sort(begin, end);
        g.max_degree_ = std::max<std::size_t>(g.max_degree_, static_cast<std::size_t>(end - begin));
    }
    g.edge_count_ = edges.size();
    return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    auto row = neighbors(u);
    return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Graph::Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId v = 0; v < vertex_count(); ++v)
        for (VertexId u : neighbors(v))
            if (u > v) out.emplace_back(v, u);
    return out;
}

namespace {

std::uint64_t parse_vertex_id(const std::string& token, std::size_t line_no) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw DataError("edge list line " + std::to_string(line_no) +
                        ": expected a nonnegative integer, got \"" + token + "\"");
    return value;
}

} // namespace

Graph load_edge_list(std::istream& in) {
    std::unordered_map<std::uint64_t, std::uint32_t> rank; // id -> first-appearance index
    std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
    std::uint64_t max_id = 0;
    auto intern = [&](std::uint64_t id) {
        if (rank.try_emplace(id, static_cast<std::uint32_t>(rank.size())).second)
            max_id = std::max(max_id, id);
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string token;
        std::vector<std::string> tokens;
        while (fields >> token) tokens.push_back(token);
        if (tokens.empty() || tokens[0][0] == '#') continue;
        if (tokens.size() != 2)
            throw DataError("edge list line " + std::to_string(line_no) +
                            ": expected two vertex ids, got " + std::to_string(tokens.size()) +
                            " tokens");
        std::uint64_t u = parse_vertex_id(tokens[0], line_no);
        std::uint64_t v = parse_vertex_id(tokens[1], line_no);
        if (rank.size() >= 0xFFFFFFFFull && !rank.count(u))
            throw DataError("edge list has too many vertices");
        intern(u);
        intern(v);
        raw.emplace_back(u, v);
    }
    if (rank.empty()) throw DataError("edge list is empty");

    std::size_t n = rank.size();
    // Ids forming exactly {0..n-1} are kept as-is; anything sparser is
    // compacted in first-appearance order.
    bool dense = max_id == n - 1;
    std::vector<Graph::Edge> edges;
    edges.reserve(raw.size());
    for (const auto& [u, v] : raw) {
        Graph::VertexId cu = dense ? static_cast<Graph::VertexId>(u) : rank.at(u);
        Graph::VertexId cv = dense ? static_cast<Graph::VertexId>(v) : rank.at(v);
        edges.emplace_back(cu, cv);
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open edge list file: " + path);
    return load_edge_list(in);
}

void save_edge_list(const Graph& g, std::ostream& out) {
    for (Graph::VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) {
            out << v << ' ' << v << '\n'; // keeps the vertex across a reload
            continue;
        }
        for (Graph::VertexId u : g.neighbors(v))
            if (u > v) out << v << ' ' << u << '\n';
    }
}

void save_edge_list(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write edge list file: " + path);
    save_edge_list(g, out);
    if (!out) throw DataError("failed writing edge list file: " + path);
}

Graph generate_cycle(std::size_t n) {
    if (n < 3) throw DataError("cycle needs n >= 3");
    std::vector<Graph::Edge> edges;
    edges.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        edges.emplace_back(static_cast<Graph::VertexId>(i),
                           static_cast<Graph::VertexId>((i + 1) % n));
    return Graph::from_edges(n, std::move(edges));
}

Graph generate_path(std::size_t n) {
    if (n < 1) throw DataError("path needs n >= 1");
    std::vector<Graph::Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i)
        edges.emplace_back(static_cast<Graph::VertexId>(i),
                           static_cast<Graph::VertexId>(i + 1));
    return Graph::from_edges(n, std::move(edges));
}

Graph generate_complete(std::size_t n) {
    if (n < 1) throw DataError("complete needs n >= 1");
    std::vector<Graph::Edge> edges;
    edges.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            edges.emplace_back(static_cast<Graph::VertexId>(i),
                               static_cast<Graph::VertexId>(j));
    return Graph::from_edges(n, std::move(edges));
}

Graph generate_grid2d(std::size_t rows, std::size_t cols) {
    if (rows < 1 || cols < 1) throw DataError("grid2d needs rows, cols >= 1");
    auto id = [cols](std::size_t r, std::size_t c) {
        return static_cast<Graph::VertexId>(r * cols + c);
    };
    std::vector<Graph::Edge> edges;
    edges.reserve(2 * rows * cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    return Graph::from_edges(rows * cols, std::move(edges));
}

Graph generate_star(std::size_t leaves) {
    if (leaves < 1) throw DataError("star needs leaves >= 1");
    std::vector<Graph::Edge> edges;
    edges.reserve(leaves);
    for (std::size_t i = 1; i <= leaves; ++i)
        edges.emplace_back(0, static_cast<Graph::VertexId>(i));
    return Graph::from_edges(leaves + 1, std::move(edges));
}

Graph generate_preferential(std::size_t n, std::size_t m, std::uint64_t seed) {
    if (m < 1) throw DataError("preferential attachment needs m >= 1");
    if (n < m + 1) throw DataError("preferential attachment needs n >= m + 1");
    std::vector<Graph::Edge> edges;
    std::vector<Graph::VertexId> endpoints; // each vertex appears once per incident edge
    for (std::size_t i = 0; i <= m; ++i)
        for (std::size_t j = i + 1; j <= m; ++j) {
            edges.emplace_back(static_cast<Graph::VertexId>(i),
                               static_cast<Graph::VertexId>(j));
            endpoints.push_back(static_cast<Graph::VertexId>(i));
            endpoints.push_back(static_cast<Graph::VertexId>(j));
        }
    RngStream rng(seed, 0);
    for (std::size_t v = m + 1; v < n; ++v) {
        std::set<Graph::VertexId> targets;
        while (targets.size() < m)
            targets.insert(endpoints[rng.below(endpoints.size())]);
        for (Graph::VertexId t : targets) {
            edges.emplace_back(static_cast<Graph::VertexId>(v), t);
            endpoints.push_back(static_cast<Graph::VertexId>(v));
            endpoints.push_back(t);
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph generate(const std::string& kind, const std::vector<std::uint64_t>& args,
               std::uint64_t seed) {
    auto want = [&](std::size_t count) {
        if (args.size() != count)
            throw DataError("generator \"" + kind + "\" takes " + std::to_string(count) +
                            " size argument(s), got " + std::to_string(args.size()));
    };
    if (kind == "cycle") {
        want(1);
        return generate_cycle(args[0]);
    }
    if (kind == "path") {
        want(1);
        return generate_path(args[0]);
    }
    if (kind == "complete") {
        want(1);
        return generate_complete(args[0]);
    }
    if (kind == "star") {
        want(1);
        return generate_star(args[0]);
    }
    if (kind == "grid2d") {
        want(2);
        return generate_grid2d(args[0], args[1]);
    }
    if (kind == "ba") {
        want(2);
        return generate_preferential(args[0], args[1], seed);
    }
    throw DataError("unknown generator kind: " + kind);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Graph::Edge> edges = a.edges();
    auto offset = static_cast<Graph::VertexId>(a.vertex_count());
    for (const auto& [u, v] : b.edges())
        edges.emplace_back(u + offset, v + offset);
    return Graph::from_edges(a.vertex_count() + b.vertex_count(), std::move(edges));
}

Graph::VertexId random_vertex(const Graph& g, RngStream& rng) {
    if (g.vertex_count() == 0) throw DataError("cannot sample a vertex of an empty graph");
    return static_cast<Graph::VertexId>(rng.below(g.vertex_count()));
}

Graph::VertexId random_neighbor(const Graph& g, Graph::VertexId v, RngStream& rng) {
    auto row = g.neighbors(v);
    if (row.empty()) return v; // isolated vertices self-loop: the walk stays put
    return row[rng.below(row.size())];
}

} // namespace spectral
