#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "spectral/io.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const char* exe = std::getenv("SPECTRAL_SKETCH_CLI");
    REQUIRE_MESSAGE(exe != nullptr, "SPECTRAL_SKETCH_CLI must point at the binary");
    std::string cmd = std::string(exe) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path workdir() {
    auto dir = fs::temp_directory_path() / "spectral_cli_test";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t count_lines(const std::string& text) {
    std::size_t lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    return lines;
}

// Number of vertical segments in the first polyline's points attribute.
std::size_t count_risers(const std::string& svg) {
    auto at = svg.find("points=\"");
    REQUIRE(at != std::string::npos);
    at += 8;
    auto end = svg.find('"', at);
    std::istringstream points(svg.substr(at, end - at));
    std::vector<std::pair<double, double>> pts;
    std::string pair;
    while (points >> pair) {
        auto comma = pair.find(',');
        pts.emplace_back(std::stod(pair.substr(0, comma)), std::stod(pair.substr(comma + 1)));
    }
    std::size_t risers = 0;
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (pts[i].first == pts[i - 1].first && pts[i].second != pts[i - 1].second) ++risers;
    return risers;
}

} // namespace

TEST_CASE("generate writes the expected edge lists") {
    auto dir = workdir();
    auto cycle = (dir / "cycle4.txt").string();
    CHECK(run_cli("generate cycle 4 --out " + cycle).exit_code == 0);
    CHECK(count_lines(slurp(cycle)) == 4);

    auto complete = (dir / "k3.txt").string();
    CHECK(run_cli("generate complete 3 --out " + complete).exit_code == 0);
    CHECK(count_lines(slurp(complete)) == 3);

    auto grid = (dir / "grid22.txt").string();
    CHECK(run_cli("generate grid2d 2 2 --out " + grid).exit_code == 0);
    CHECK(count_lines(slurp(grid)) == 4);

    auto ba = (dir / "ba.txt").string();
    CHECK(run_cli("generate ba 50 2 --seed 7 --out " + ba).exit_code == 0);
    auto rerun = (dir / "ba2.txt").string();
    CHECK(run_cli("generate ba 50 2 --seed 7 --out " + rerun).exit_code == 0);
    CHECK(slurp(ba) == slurp(rerun));
}

TEST_CASE("exact spectra as files") {
    auto dir = workdir();
    auto k2 = (dir / "k2.txt").string();
    run_cli("generate complete 2 --out " + k2);
    auto k2spec = (dir / "k2_spec.csv").string();
    CHECK(run_cli("exact " + k2 + " --out " + k2spec).exit_code == 0);
    CHECK(slurp(k2spec) == "0\n2\n");

    auto p2 = (dir / "p2.txt").string();
    run_cli("generate path 2 --out " + p2);
    auto p2spec = (dir / "p2_spec.csv").string();
    run_cli("exact " + p2 + " --out " + p2spec);
    CHECK(slurp(p2spec) == slurp(k2spec));

    auto tri = (dir / "tri.txt").string();
    run_cli("generate cycle 3 --out " + tri);
    auto trispec = (dir / "tri_spec.csv").string();
    CHECK(run_cli("exact " + tri + " --out " + trispec).exit_code == 0);
    auto s = spectral::read_spectrum_csv(trispec);
    REQUIRE(s.size() == 3);
    CHECK(std::abs(s[0] - 0.0) < 1e-9);
    CHECK(std::abs(s[1] - 1.5) < 1e-9);
    CHECK(std::abs(s[2] - 1.5) < 1e-9);
}

TEST_CASE("estimate emits distribution, discretization, and manifest") {
    auto dir = workdir();
    auto k2 = (dir / "est_k2.txt").string();
    run_cli("generate complete 2 --out " + k2);
    auto out = (dir / "est.csv").string();
    std::string flags = " --walks 500 --length 10 --repeats 2 --seed 3 --n-out 6 --out ";
    CHECK(run_cli("estimate " + k2 + flags + out).exit_code == 0);

    auto d = spectral::read_distribution_csv(out);
    CHECK(d.support.front() >= 0.0);
    CHECK(d.support.back() <= 2.0);

    auto spec = spectral::read_spectrum_csv(out + ".spectrum.csv");
    CHECK(spec.size() == 6);

    auto manifest = nlohmann::json::parse(slurp(out + ".manifest.json"));
    CHECK(manifest["walks"] == 500);
    CHECK(manifest["length"] == 10);
    CHECK(manifest["repeats"] == 2);
    CHECK(manifest["seed"] == 3);
    CHECK(manifest["n_out"] == 6);
    CHECK(manifest["queries"] == 500 * 10 * 2);
    CHECK(manifest.contains("wall_time_seconds"));

    // Re-running with the same seed reproduces the primary outputs bytewise.
    auto out2 = (dir / "est_rerun.csv").string();
    CHECK(run_cli("estimate " + k2 + flags + out2).exit_code == 0);
    CHECK(slurp(out) == slurp(out2));
    CHECK(slurp(out + ".spectrum.csv") == slurp(out2 + ".spectrum.csv"));

    // The walk estimate of the two-vertex graph recovers its spectrum nearly
    // exactly, so the distance to the exact spectrum stays within the gate.
    auto k2spec = (dir / "est_k2_spec.csv").string();
    run_cli("exact " + k2 + " --out " + k2spec);
    auto cmp = run_cli("compare " + out + " " + k2spec);
    CHECK(cmp.exit_code == 0);
    CHECK(std::stod(cmp.output) <= 0.05);
}

TEST_CASE("compare prints six-decimal distances") {
    auto dir = workdir();
    auto a = dir / "cmp_a.csv";
    auto b = dir / "cmp_b.csv";
    std::ofstream(a) << "0\n2\n";
    std::ofstream(b) << "0\n0\n";
    auto self = run_cli("compare " + a.string() + " " + a.string());
    CHECK(self.exit_code == 0);
    CHECK(self.output == "0.000000\n");
    auto cross = run_cli("compare " + a.string() + " " + b.string());
    CHECK(cross.exit_code == 0);
    CHECK(cross.output == "1.000000\n");
}

TEST_CASE("a fine discretization stays close to its source") {
    auto dir = workdir();
    auto g = (dir / "disc_g.txt").string();
    run_cli("generate grid2d 3 3 --out " + g);
    auto out = (dir / "disc_est.csv").string();
    CHECK(run_cli("estimate " + g +
                  " --walks 300 --length 8 --repeats 2 --seed 5 --n-out 2000 --out " + out)
              .exit_code == 0);
    auto cmp = run_cli("compare " + out + " " + out + ".spectrum.csv");
    CHECK(cmp.exit_code == 0);
    CHECK(std::stod(cmp.output) <= 0.01);
}

TEST_CASE("partition estimate emits distribution, certificate, and dump") {
    auto dir = workdir();
    auto g = (dir / "part_g.txt").string();
    run_cli("generate grid2d 10 10 --out " + g);
    auto out = (dir / "part_est.csv").string();
    auto dump = (dir / "part_dump.csv").string();
    std::string cmd = "partition-estimate " + g +
                      " --max-component 25 --samples 2000 --seed 5 --partition-out " + dump +
                      " --out " + out;
    CHECK(run_cli(cmd).exit_code == 0);

    auto d = spectral::read_distribution_csv(out);
    CHECK(d.support.front() >= 0.0);
    CHECK(d.support.back() <= 2.0);

    auto cert = nlohmann::json::parse(slurp(out + ".certificate.json"));
    auto cut = cert["cut_edges"].get<std::uint64_t>();
    CHECK(cut <= 60);
    CHECK(cert["max_size"].get<std::size_t>() <= 25);
    CHECK(cert["components"].get<std::size_t>() >= 4);
    CHECK(std::abs(cert["certified_w1_bound"].get<double>() -
                   2.0 * static_cast<double>(cut) / 100.0) < 1e-12);

    auto dump_text = slurp(dump);
    CHECK(dump_text.substr(0, 17) == "vertex,component\n");
    CHECK(count_lines(dump_text) == 101);

    auto out2 = (dir / "part_rerun.csv").string();
    std::string cmd2 = "partition-estimate " + g +
                       " --max-component 25 --samples 2000 --seed 5 --out " + out2;
    CHECK(run_cli(cmd2).exit_code == 0);
    CHECK(slurp(out) == slurp(out2));
    CHECK(slurp(out + ".certificate.json") == slurp(out2 + ".certificate.json"));
}

TEST_CASE("plot renders step functions") {
    auto dir = workdir();
    auto spec = dir / "plot_k2.csv";
    std::ofstream(spec) << "0\n2\n";
    auto svg = (dir / "plot.svg").string();
    CHECK(run_cli("plot " + spec.string() + " --out " + svg).exit_code == 0);
    auto text = slurp(svg);
    CHECK(text.find("<svg") != std::string::npos);
    CHECK(text.rfind("</svg>") != std::string::npos);
    CHECK(count_risers(text) == 2);

    auto truth = dir / "plot_truth.csv";
    std::ofstream(truth) << "value,mass\n0,0.5\n2,0.5\n";
    auto overlay = (dir / "plot_overlay.svg").string();
    CHECK(run_cli("plot " + spec.string() + " --truth " + truth.string() + " --out " + overlay)
              .exit_code == 0);
    auto overlay_text = slurp(overlay);
    std::size_t polylines = 0;
    for (std::size_t at = overlay_text.find("<polyline"); at != std::string::npos;
         at = overlay_text.find("<polyline", at + 1))
        ++polylines;
    CHECK(polylines == 2);
}

TEST_CASE("exit codes distinguish failure classes") {
    auto dir = workdir();
    CHECK(run_cli("exact " + (dir / "no_such_file.txt").string() + " --out " +
                  (dir / "x.csv").string())
              .exit_code == 2);
    CHECK(run_cli("generate cycle 2 --out " + (dir / "bad_cycle.txt").string()).exit_code == 2);
    CHECK(run_cli("estimate --definitely-not-a-flag").exit_code == 1);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("compare " + (dir / "missing_a.csv").string() + " " +
                  (dir / "missing_b.csv").string())
              .exit_code == 2);
}
