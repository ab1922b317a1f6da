#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "spectral/error.hpp"
#include "spectral/exact.hpp"
#include "spectral/graph.hpp"
#include "spectral/invert.hpp"
#include "spectral/io.hpp"
#include "spectral/moments.hpp"
#include "spectral/partition.hpp"
#include "spectral/pipeline.hpp"
#include "spectral/spectrum_ops.hpp"

namespace py = pybind11;

namespace {

spectral::SpectralDistribution make_distribution(std::vector<double> support,
                                                 std::vector<double> masses) {
    spectral::SpectralDistribution d{std::move(support), std::move(masses)};
    d.validate();
    return d;
}

std::vector<spectral::Graph::VertexId> neighbor_list(const spectral::Graph& g,
                                                     spectral::Graph::VertexId v) {
    auto row = g.neighbors(v);
    return {row.begin(), row.end()};
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Graph spectrum estimation from random walks";

    py::register_exception<spectral::DataError>(m, "DataError", PyExc_ValueError);
    py::register_exception<spectral::NumericalError>(m, "NumericalError", PyExc_RuntimeError);

    py::class_<spectral::Graph>(m, "Graph")
        .def_static(
            "from_edges",
            [](std::size_t n, std::vector<spectral::Graph::Edge> edges) {
                return spectral::Graph::from_edges(n, std::move(edges));
            },
            py::arg("n"), py::arg("edges"))
        .def_property_readonly("vertex_count", &spectral::Graph::vertex_count)
        .def_property_readonly("edge_count", &spectral::Graph::edge_count)
        .def_property_readonly("max_degree", &spectral::Graph::max_degree)
        .def("degree", &spectral::Graph::degree, py::arg("v"))
        .def("neighbors", &neighbor_list, py::arg("v"))
        .def("has_edge", &spectral::Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("edges", &spectral::Graph::edges)
        .def("__eq__",
             [](const spectral::Graph& a, const spectral::Graph& b) { return a == b; })
        .def("__len__", &spectral::Graph::vertex_count)
        .def("__repr__", [](const spectral::Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("load_edge_list",
          [](const std::string& path) { return spectral::load_edge_list(path); },
          py::arg("path"));
    m.def("save_edge_list",
          [](const spectral::Graph& g, const std::string& path) {
              spectral::save_edge_list(g, path);
          },
          py::arg("graph"), py::arg("path"));

    m.def("generate_cycle", &spectral::generate_cycle, py::arg("n"));
    m.def("generate_path", &spectral::generate_path, py::arg("n"));
    m.def("generate_complete", &spectral::generate_complete, py::arg("n"));
    m.def("generate_grid2d", &spectral::generate_grid2d, py::arg("rows"), py::arg("cols"));
    m.def("generate_star", &spectral::generate_star, py::arg("leaves"));
    m.def("generate_preferential", &spectral::generate_preferential, py::arg("n"),
          py::arg("m"), py::arg("seed"));
    m.def("generate", &spectral::generate, py::arg("kind"), py::arg("args"),
          py::arg("seed") = 0);
    m.def("disjoint_union", &spectral::disjoint_union, py::arg("a"), py::arg("b"));

    py::class_<spectral::SpectralDistribution>(m, "SpectralDistribution")
        .def(py::init(&make_distribution), py::arg("support"), py::arg("masses"))
        .def_readonly("support", &spectral::SpectralDistribution::support)
        .def_readonly("masses", &spectral::SpectralDistribution::masses)
        .def("total_mass", &spectral::SpectralDistribution::total_mass)
        .def("mean", &spectral::SpectralDistribution::mean)
        .def("__len__", &spectral::SpectralDistribution::size)
        .def("__repr__", [](const spectral::SpectralDistribution& d) {
            return "SpectralDistribution(" + std::to_string(d.size()) + " atoms)";
        });

    m.def("point_mass_distribution", &spectral::point_mass_distribution, py::arg("values"));

    m.def("exact_spectrum", &spectral::exact_spectrum, py::arg("graph"),
          py::arg("dense_limit") = spectral::kDenseLimit);
    m.def("exact_moments", &spectral::exact_moments, py::arg("spectrum"),
          py::arg("max_order"));

    py::class_<spectral::MomentVector>(m, "MomentVector")
        .def(py::init([](std::vector<double> values, std::uint64_t walks) {
                 spectral::MomentVector mv;
                 mv.max_order = static_cast<int>(values.size());
                 mv.values = std::move(values);
                 mv.walks_used = walks;
                 return mv;
             }),
             py::arg("values"), py::arg("walks") = 0)
        .def_readonly("values", &spectral::MomentVector::values)
        .def_readonly("walks_used", &spectral::MomentVector::walks_used)
        .def_readonly("max_order", &spectral::MomentVector::max_order);

    m.def("approx_spectral_moment",
          [](const spectral::Graph& g, int ell, std::uint64_t s, std::uint64_t seed) {
              return spectral::approx_spectral_moment(g, ell, s, seed);
          },
          py::arg("graph"), py::arg("ell"), py::arg("walks"), py::arg("seed") = 0);
    m.def("estimate_moments",
          [](const spectral::Graph& g, int max_order, std::uint64_t s, std::uint64_t seed) {
              return spectral::estimate_moments(g, max_order, s, seed);
          },
          py::arg("graph"), py::arg("max_order"), py::arg("walks"), py::arg("seed") = 0);
    m.def("required_walks", &spectral::required_walks, py::arg("epsilon"), py::arg("delta"));

    py::class_<spectral::GridSpec>(m, "GridSpec")
        .def(py::init([](double lo, double hi, double spacing) {
                 return spectral::GridSpec{lo, hi, spacing};
             }),
             py::arg("lo") = -1.0, py::arg("hi") = 1.0, py::arg("spacing") = 0.01)
        .def_readonly("lo", &spectral::GridSpec::lo)
        .def_readonly("hi", &spectral::GridSpec::hi)
        .def_readonly("spacing", &spectral::GridSpec::spacing)
        .def("points", &spectral::GridSpec::points);

    py::class_<spectral::MomentInverseResult>(m, "MomentInverseResult")
        .def_readonly("distribution", &spectral::MomentInverseResult::distribution)
        .def_readonly("objective", &spectral::MomentInverseResult::objective)
        .def_readonly("iterations", &spectral::MomentInverseResult::iterations);

    m.def("moment_inverse", &spectral::moment_inverse, py::arg("moments"), py::arg("grid"));
    m.def("average_distributions", &spectral::average_distributions, py::arg("distributions"));
    m.def("walk_to_laplacian", &spectral::walk_to_laplacian, py::arg("distribution"));

    m.def("emd_w1", &spectral::emd_w1, py::arg("p"), py::arg("q"));
    m.def("sorted_vector_distance", &spectral::sorted_vector_distance, py::arg("a"),
          py::arg("b"));
    m.def("discretize_spectrum", &spectral::discretize_spectrum, py::arg("n"),
          py::arg("distribution"));
    m.def("union_spectrum", &spectral::union_spectrum, py::arg("a"), py::arg("b"));

    py::class_<spectral::Partition>(m, "Partition")
        .def_readonly("component_of", &spectral::Partition::component_of)
        .def_readonly("components", &spectral::Partition::components)
        .def_readonly("cut_edges", &spectral::Partition::cut_edges)
        .def_readonly("max_component_size", &spectral::Partition::max_component_size);

    m.def("partition_graph", &spectral::partition_graph, py::arg("graph"),
          py::arg("max_size"));
    m.def("remove_cut_edges", &spectral::remove_cut_edges, py::arg("graph"),
          py::arg("partition"));

    py::class_<spectral::PartitionEstimate>(m, "PartitionEstimate")
        .def_readonly("partition", &spectral::PartitionEstimate::partition)
        .def_readonly("distribution", &spectral::PartitionEstimate::distribution)
        .def_readonly("certified_error", &spectral::PartitionEstimate::certified_error)
        .def_readonly("sampling_band", &spectral::PartitionEstimate::sampling_band)
        .def_readonly("samples", &spectral::PartitionEstimate::samples);

    m.def("partition_spectrum_estimate", &spectral::partition_spectrum_estimate,
          py::arg("graph"), py::arg("max_size"), py::arg("samples") = 20000,
          py::arg("seed") = 0);

    py::class_<spectral::EstimateResult>(m, "EstimateResult")
        .def_readonly("distribution", &spectral::EstimateResult::distribution)
        .def_readonly("neighbor_queries", &spectral::EstimateResult::neighbor_queries)
        .def_readonly("objectives", &spectral::EstimateResult::objectives);

    m.def(
        "estimate_spectrum",
        [](const spectral::Graph& g, std::uint64_t walks, int length, int repeats,
           double grid, std::uint64_t seed, int threads) {
            spectral::EstimateOptions options;
            options.walks = walks;
            options.length = length;
            options.repeats = repeats;
            options.grid = grid;
            options.seed = seed;
            options.threads = threads;
            return spectral::estimate_spectrum(g, options);
        },
        py::arg("graph"), py::arg("walks") = 10000, py::arg("length") = 20,
        py::arg("repeats") = 20, py::arg("grid") = 0.01, py::arg("seed") = 0,
        py::arg("threads") = 0);
}
