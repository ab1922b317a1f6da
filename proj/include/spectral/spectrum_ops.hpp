#pragma once

#include "spectral/distribution.hpp"
#include "spectral/exact.hpp"

namespace spectral {

// 1-D earth mover (Wasserstein-1) distance: integral of |F_p - F_q| over the
// merged support. Throws DataError if either input is unnormalized beyond tol.
double emd_w1(const SpectralDistribution& p, const SpectralDistribution& q);

// (1/n) sum |a_i - b_i| for equal-length sorted vectors; equals emd_w1 of the
// corresponding point-mass distributions. Throws DataError on length mismatch.
double sorted_vector_distance(const SortedSpectrum& a, const SortedSpectrum& b);

// Length-n nondecreasing vector whose i-th entry is the mean of q restricted
// to its i-th n-quantile band; atoms straddling a band boundary split
// fractionally. Mean is preserved, and the result's point-mass distribution is
// never farther from any p than q is (contraction).
SortedSpectrum discretize_spectrum(std::size_t n, const SpectralDistribution& q);

// Merged multiset of two spectra, sorted; the spectrum of a disjoint union.
SortedSpectrum union_spectrum(const SortedSpectrum& a, const SortedSpectrum& b);

} // namespace spectral
