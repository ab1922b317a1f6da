#include "spectral/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "spectral/error.hpp"
#include "spectral/util.hpp"

namespace spectral {

namespace {

constexpr const char* kDistributionHeader = "value,mass";

double parse_double(std::string_view token, const std::string& path, std::size_t line_no) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw DataError(path + " line " + std::to_string(line_no) +
                        ": expected a number, got \"" + std::string(token) + "\"");
    return value;
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write file: " + path);
    return out;
}

} // namespace

void write_spectrum_csv(std::ostream& out, const SortedSpectrum& s) {
    for (double v : s) out << format_double(v) << '\n';
}

void write_spectrum_csv(const std::string& path, const SortedSpectrum& s) {
    auto out = open_out(path);
    write_spectrum_csv(out, s);
    if (!out) throw DataError("failed writing file: " + path);
}

SortedSpectrum read_spectrum_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open file: " + path);
    SortedSpectrum values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        values.push_back(parse_double(line, path, line_no));
    }
    if (values.empty()) throw DataError(path + ": empty spectrum file");
    std::sort(values.begin(), values.end());
    return values;
}

void write_distribution_csv(std::ostream& out, const SpectralDistribution& d) {
    out << kDistributionHeader << '\n';
    for (std::size_t i = 0; i < d.size(); ++i)
        out << format_double(d.support[i]) << ',' << format_double(d.masses[i]) << '\n';
}

void write_distribution_csv(const std::string& path, const SpectralDistribution& d) {
    auto out = open_out(path);
    write_distribution_csv(out, d);
    if (!out) throw DataError("failed writing file: " + path);
}

SpectralDistribution read_distribution_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open file: " + path);
    std::string line;
    if (!std::getline(in, line) || strip_cr(line) != kDistributionHeader)
        throw DataError(path + ": expected header \"value,mass\"");
    std::vector<std::pair<double, double>> atoms;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos)
            throw DataError(path + " line " + std::to_string(line_no) + ": expected value,mass");
        double value = parse_double(std::string_view(line).substr(0, comma), path, line_no);
        double mass = parse_double(std::string_view(line).substr(comma + 1), path, line_no);
        atoms.emplace_back(value, mass);
    }
    if (atoms.empty()) throw DataError(path + ": empty distribution file");
    SpectralDistribution d = distribution_from_atoms(std::move(atoms));
    d.validate();
    return d;
}

SpectralDistribution read_any_distribution(const std::string& path) {
    std::ifstream probe(path);
    if (!probe) throw DataError("cannot open file: " + path);
    std::string first;
    std::getline(probe, first);
    probe.close();
    if (strip_cr(first) == kDistributionHeader) return read_distribution_csv(path);
    return point_mass_distribution(read_spectrum_csv(path));
}

std::string moments_to_json(const MomentVector& mv) {
    nlohmann::ordered_json j;
    j["max_order"] = mv.max_order;
    j["walks"] = mv.walks_used;
    j["moments"] = mv.values;
    return j.dump(2) + "\n";
}

MomentVector moments_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("invalid moment JSON: ") + e.what());
    }
    if (!j.contains("max_order") || !j.contains("walks") || !j.contains("moments"))
        throw DataError("moment JSON needs max_order, walks, and moments");
    MomentVector mv;
    mv.max_order = j["max_order"].get<int>();
    mv.walks_used = j["walks"].get<std::uint64_t>();
    mv.values = j["moments"].get<std::vector<double>>();
    if (mv.values.size() != static_cast<std::size_t>(mv.max_order))
        throw DataError("moment JSON length disagrees with max_order");
    return mv;
}

} // namespace spectral
