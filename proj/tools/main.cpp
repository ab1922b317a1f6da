#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spectral/error.hpp"
#include "spectral/exact.hpp"
#include "spectral/graph.hpp"
#include "spectral/io.hpp"
#include "spectral/partition.hpp"
#include "spectral/pipeline.hpp"
#include "spectral/plot.hpp"
#include "spectral/spectrum_ops.hpp"

namespace {

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw spectral::DataError("cannot write file: " + path);
    out << text;
    if (!out) throw spectral::DataError("failed writing file: " + path);
}

void run_generate(const std::string& kind, const std::vector<std::uint64_t>& sizes,
                  std::uint64_t seed, const std::string& out) {
    spectral::Graph g = spectral::generate(kind, sizes, seed);
    spectral::save_edge_list(g, out);
}

void run_exact(const std::string& graph_path, const std::string& out) {
    spectral::Graph g = spectral::load_edge_list(graph_path);
    spectral::write_spectrum_csv(out, spectral::exact_spectrum(g));
}

void run_estimate(const std::string& graph_path, const spectral::EstimateOptions& options,
                  std::int64_t n_out, const std::string& out) {
    auto started = std::chrono::steady_clock::now();
    spectral::Graph g = spectral::load_edge_list(graph_path);
    spectral::EstimateResult result = spectral::estimate_spectrum(g, options);
    spectral::write_distribution_csv(out, result.distribution);
    if (n_out > 0)
        spectral::write_spectrum_csv(
            out + ".spectrum.csv",
            spectral::discretize_spectrum(static_cast<std::size_t>(n_out), result.distribution));
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

    nlohmann::ordered_json manifest;
    manifest["command"] = "estimate";
    manifest["graph"] = graph_path;
    manifest["walks"] = options.walks;
    manifest["length"] = options.length;
    manifest["repeats"] = options.repeats;
    manifest["grid"] = options.grid;
    manifest["seed"] = options.seed;
    if (n_out > 0) manifest["n_out"] = n_out;
    manifest["queries"] = result.neighbor_queries;
    manifest["wall_time_seconds"] = seconds;
    write_text(out + ".manifest.json", manifest.dump(2) + "\n");
}

void run_compare(const std::string& path_a, const std::string& path_b) {
    spectral::SpectralDistribution a = spectral::read_any_distribution(path_a);
    spectral::SpectralDistribution b = spectral::read_any_distribution(path_b);
    std::printf("%.6f\n", spectral::emd_w1(a, b));
}

void run_partition_estimate(const std::string& graph_path, std::size_t max_component,
                            std::uint64_t samples, std::uint64_t seed, const std::string& out,
                            const std::string& partition_out) {
    spectral::Graph g = spectral::load_edge_list(graph_path);
    spectral::PartitionEstimate est =
        spectral::partition_spectrum_estimate(g, max_component, samples, seed);
    spectral::write_distribution_csv(out, est.distribution);

    nlohmann::ordered_json certificate;
    certificate["components"] = est.partition.components.size();
    certificate["cut_edges"] = est.partition.cut_edges;
    certificate["max_size"] = est.partition.max_component_size;
    certificate["certified_w1_bound"] = est.certified_error;
    write_text(out + ".certificate.json", certificate.dump(2) + "\n");

    if (!partition_out.empty()) {
        std::string dump = "vertex,component\n";
        for (std::size_t v = 0; v < est.partition.component_of.size(); ++v)
            dump += std::to_string(v) + ',' + std::to_string(est.partition.component_of[v]) + '\n';
        write_text(partition_out, dump);
    }
}

void run_plot(const std::string& input, const std::string& truth, const std::string& out) {
    std::vector<spectral::PlotSeries> series;
    series.push_back({"estimate", spectral::read_any_distribution(input)});
    if (!truth.empty()) series.push_back({"truth", spectral::read_any_distribution(truth)});
    write_text(out, spectral::render_cdf_svg(series));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph spectrum estimation via random-walk moments"};
    app.require_subcommand(1);

    std::string kind, graph_path, path_a, path_b, truth_path, partition_out, out;
    std::vector<std::uint64_t> sizes;
    std::uint64_t seed = 0;
    std::uint64_t samples = 20000;
    std::size_t max_component = 0;
    std::int64_t n_out = 0;
    spectral::EstimateOptions options;

    auto* generate = app.add_subcommand("generate", "write a synthetic graph as an edge list");
    generate->add_option("kind", kind, "cycle|path|complete|star|grid2d|ba")->required();
    generate->add_option("sizes", sizes, "size parameters (grid2d: rows cols; ba: n m)")
        ->required()
        ->expected(1, 2);
    generate->add_option("--seed", seed, "generator seed (ba only)");
    generate->add_option("--out", out, "output edge-list path")->required();
    generate->callback([&] { run_generate(kind, sizes, seed, out); });

    auto* exact = app.add_subcommand("exact", "exact normalized-Laplacian spectrum");
    exact->add_option("graph", graph_path, "edge-list path")->required();
    exact->add_option("--out", out, "output spectrum CSV path")->required();
    exact->callback([&] { run_exact(graph_path, out); });

    auto* estimate = app.add_subcommand("estimate", "walk-sampling spectrum estimate");
    estimate->add_option("graph", graph_path, "edge-list path")->required();
    estimate->add_option("--walks", options.walks, "walks per repeat");
    estimate->add_option("--length", options.length, "walk length = moment count");
    estimate->add_option("--repeats", options.repeats, "independent repeats to average");
    estimate->add_option("--grid", options.grid, "inversion grid spacing on [-1,1]");
    estimate->add_option("--seed", options.seed, "random seed");
    estimate->add_option("--n-out", n_out, "also write a sorted length-n spectrum CSV");
    estimate->add_option("--out", out, "output distribution CSV path")->required();
    estimate->callback([&] { run_estimate(graph_path, options, n_out, out); });

    auto* compare = app.add_subcommand("compare", "earth mover distance between two spectra");
    compare->add_option("a", path_a, "spectrum or distribution CSV")->required();
    compare->add_option("b", path_b, "spectrum or distribution CSV")->required();
    compare->callback([&] { run_compare(path_a, path_b); });

    auto* partition = app.add_subcommand(
        "partition-estimate", "partition into small components and sample the cut spectrum");
    partition->add_option("graph", graph_path, "edge-list path")->required();
    partition->add_option("--max-component", max_component, "component size cap")->required();
    partition->add_option("--samples", samples, "eigenvalue draws");
    partition->add_option("--seed", seed, "random seed");
    partition->add_option("--partition-out", partition_out, "also dump vertex,component CSV");
    partition->add_option("--out", out, "output distribution CSV path")->required();
    partition->callback([&] {
        run_partition_estimate(graph_path, max_component, samples, seed, out, partition_out);
    });

    auto* plot = app.add_subcommand("plot", "render a spectrum CDF as SVG");
    plot->add_option("input", path_a, "spectrum or distribution CSV")->required();
    plot->add_option("--truth", truth_path, "overlay a second CDF");
    plot->add_option("--out", out, "output SVG path")->required();
    plot->callback([&] { run_plot(path_a, truth_path, out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const spectral::DataError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const spectral::NumericalError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    return 0;
}
