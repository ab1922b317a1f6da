#pragma once

#include <string>
#include <vector>

#include "spectral/distribution.hpp"

namespace spectral {

struct PlotSeries {
    std::string label;
    SpectralDistribution distribution;
};

// Self-contained SVG of the empirical CDFs, one step polyline per series
// (estimate first, truth overlay second). Deterministic output.
std::string render_cdf_svg(const std::vector<PlotSeries>& series);

} // namespace spectral
