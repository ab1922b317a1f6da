#pragma once

#include <vector>

#include "spectral/distribution.hpp"
#include "spectral/moments.hpp"

namespace spectral {

// Uniform grid on [lo, hi]: points lo + i*spacing for i = 0..t with
// t = ceil((hi-lo)/spacing) and the last point clamped to hi.
struct GridSpec {
    double lo = -1.0;
    double hi = 1.0;
    double spacing = 0.01;

    // Materializes the points; throws DataError when malformed or when the
    // point count exceeds 10^4.
    std::vector<double> points() const;
};

struct MomentInverseResult {
    SpectralDistribution distribution;
    double objective = 0.0; // attained L1 moment residual
    int iterations = 0;
};

// Recovers the grid distribution whose power moments best match the
// estimates: minimize sum_ell |sum_j x_j^ell p_j - m_ell| over the
// probability simplex, solved exactly as a linear program. Throws
// NumericalError if the solver fails to converge.
MomentInverseResult moment_inverse(const MomentVector& moments, const GridSpec& grid);

// Uniform mixture of the inputs: union of supports, masses averaged with
// weight 1/k. Throws DataError on an empty list.
SpectralDistribution average_distributions(const std::vector<SpectralDistribution>& ds);

// Maps a walk-matrix distribution on [-1,1] to the Laplacian domain [0,2] via
// x -> 1-x. W1-isometric. Throws DataError if support leaves [-1,1] by more
// than 1e-9; values within that tolerance are clamped.
SpectralDistribution walk_to_laplacian(const SpectralDistribution& d);

} // namespace spectral
