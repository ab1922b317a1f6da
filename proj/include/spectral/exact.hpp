#pragma once

#include <cstddef>
#include <vector>

#include "spectral/dense.hpp"
#include "spectral/graph.hpp"

namespace spectral {

// Nondecreasing eigenvalue vector of a normalized Laplacian; entries in [0,2]
// up to eigensolver tolerance.
using SortedSpectrum = std::vector<double>;

// Largest vertex count accepted by the dense eigensolve path.
inline constexpr std::size_t kDenseLimit = 5000;

// L = I - D^{-1/2} A D^{-1/2}. Diagonal is 1 for non-isolated vertices; rows
// of isolated vertices are zero, so they contribute eigenvalue 0. Throws
// DataError above the dense limit (use the walk-based estimator instead).
SymMatrix normalized_laplacian(const Graph& g, std::size_t dense_limit = kDenseLimit);

// All n eigenvalues of normalized_laplacian(g), sorted nondecreasing.
SortedSpectrum exact_spectrum(const Graph& g, std::size_t dense_limit = kDenseLimit);

// Walk-matrix moments of a Laplacian spectrum: m_ell = (1/n) sum (1-lambda)^ell
// for ell = 1..max_order. Equals the average ell-step return probability.
std::vector<double> exact_moments(const SortedSpectrum& s, int max_order);

} // namespace spectral
