#include "spectral/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string>

#include "spectral/error.hpp"

namespace spectral {

namespace {

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape_xml(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '&')
            out += "&amp;";
        else if (c == '<')
            out += "&lt;";
        else if (c == '>')
            out += "&gt;";
        else
            out += c;
    }
    return out;
}

} // namespace

std::string render_cdf_svg(const std::vector<PlotSeries>& series) {
    if (series.empty()) throw DataError("nothing to plot");
    for (const auto& s : series) s.distribution.validate();

    double lo = series[0].distribution.support.front();
    double hi = series[0].distribution.support.back();
    for (const auto& s : series) {
        lo = std::min(lo, s.distribution.support.front());
        hi = std::max(hi, s.distribution.support.back());
    }
    double pad = std::max(0.05 * (hi - lo), 0.05);
    lo -= pad;
    hi += pad;

    constexpr double width = 640, height = 420;
    constexpr double ml = 56, mr = 16, mt = 18, mb = 42;
    const double pw = width - ml - mr;
    const double ph = height - mt - mb;
    auto px = [&](double x) { return ml + (x - lo) / (hi - lo) * pw; };
    auto py = [&](double f) { return mt + (1.0 - f) * ph; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    svg << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

    for (double f : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        svg << "<line x1=\"" << fmt(ml) << "\" y1=\"" << fmt(py(f)) << "\" x2=\""
            << fmt(ml + pw) << "\" y2=\"" << fmt(py(f))
            << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg << "<text x=\"" << fmt(ml - 8) << "\" y=\"" << fmt(py(f) + 4)
            << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">" << fmt(f)
            << "</text>\n";
    }
    for (int k = 0; k <= 4; ++k) {
        double x = lo + (hi - lo) * k / 4.0;
        svg << "<text x=\"" << fmt(px(x)) << "\" y=\"" << fmt(mt + ph + 18)
            << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" << fmt(x)
            << "</text>\n";
    }
    svg << "<line x1=\"" << fmt(ml) << "\" y1=\"" << fmt(mt) << "\" x2=\"" << fmt(ml)
        << "\" y2=\"" << fmt(mt + ph) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg << "<line x1=\"" << fmt(ml) << "\" y1=\"" << fmt(mt + ph) << "\" x2=\"" << fmt(ml + pw)
        << "\" y2=\"" << fmt(mt + ph) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";

    for (std::size_t k = 0; k < series.size(); ++k) {
        const auto& d = series[k].distribution;
        std::ostringstream pts;
        pts << fmt(px(lo)) << ',' << fmt(py(0.0));
        double f = 0.0;
        for (std::size_t i = 0; i < d.size(); ++i) {
            pts << ' ' << fmt(px(d.support[i])) << ',' << fmt(py(f));
            f += d.masses[i];
            pts << ' ' << fmt(px(d.support[i])) << ',' << fmt(py(std::min(f, 1.0)));
        }
        pts << ' ' << fmt(px(hi)) << ',' << fmt(py(1.0));
        svg << "<polyline fill=\"none\" stroke=\"" << kColors[k % 4]
            << "\" stroke-width=\"1.5\" points=\"" << pts.str() << "\"/>\n";
    }

    for (std::size_t k = 0; k < series.size(); ++k) {
        double y = mt + 14 + 18 * static_cast<double>(k);
        svg << "<rect x=\"" << fmt(ml + pw - 150) << "\" y=\"" << fmt(y - 9)
            << "\" width=\"12\" height=\"12\" fill=\"" << kColors[k % 4] << "\"/>\n";
        svg << "<text x=\"" << fmt(ml + pw - 132) << "\" y=\"" << fmt(y + 2)
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << escape_xml(series[k].label)
            << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace spectral
