#include "spectral/exact.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spectral/error.hpp"

namespace spectral {

SymMatrix normalized_laplacian(const Graph& g, std::size_t dense_limit) {
    const std::size_t n = g.vertex_count();
    if (n > dense_limit)
        throw DataError("graph has " + std::to_string(n) + " vertices, over the dense limit " +
                        std::to_string(dense_limit) + "; use the walk-based estimator instead");
    SymMatrix lap = SymMatrix::zero(n);
    for (Graph::VertexId v = 0; v < n; ++v) {
        if (g.degree(v) == 0) continue; // isolated vertices keep a zero row
        lap.at(v, v) = 1.0;
        double dv = static_cast<double>(g.degree(v));
        for (Graph::VertexId u : g.neighbors(v))
            lap.at(v, u) = -1.0 / std::sqrt(dv * static_cast<double>(g.degree(u)));
    }
    return lap;
}

SortedSpectrum exact_spectrum(const Graph& g, std::size_t dense_limit) {
    SortedSpectrum values = lapack_eigenvalues(normalized_laplacian(g, dense_limit));
    std::sort(values.begin(), values.end());
    return values;
}

std::vector<double> exact_moments(const SortedSpectrum& s, int max_order) {
    if (max_order < 1) throw DataError("moment order must be >= 1");
    const std::size_t n = s.size();
    if (n == 0) throw DataError("empty spectrum has no moments");
    std::vector<double> moments(static_cast<std::size_t>(max_order), 0.0);
    std::vector<double> power(n);
    for (std::size_t i = 0; i < n; ++i) power[i] = 1.0 - s[i]; // walk-matrix eigenvalue
    std::vector<double> walk(power);
    for (int ell = 1; ell <= max_order; ++ell) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) sum += power[i];
        moments[static_cast<std::size_t>(ell - 1)] = sum / static_cast<double>(n);
        if (ell < max_order)
            for (std::size_t i = 0; i < n; ++i) power[i] *= walk[i];
    }
    return moments;
}

} // namespace spectral
