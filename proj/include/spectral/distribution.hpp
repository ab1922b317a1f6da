#pragma once

#include <utility>
#include <vector>

#include "spectral/exact.hpp"

namespace spectral {

// Finite weighted point-mass distribution on the real line. Support is
// strictly increasing, masses are nonnegative and sum to 1.
struct SpectralDistribution {
    std::vector<double> support;
    std::vector<double> masses;

    std::size_t size() const { return support.size(); }
    double total_mass() const;
    double mean() const;

    // Throws DataError unless the invariants hold (mass total within tol of 1,
    // nonnegative masses, strictly increasing support).
    void validate(double tol = 1e-9) const;
};

// Sorts atoms, merges equal support points, drops zero masses. Does not
// renormalize; callers pass masses that already sum to 1.
SpectralDistribution distribution_from_atoms(std::vector<std::pair<double, double>> atoms);

// n equally weighted point masses at the spectrum's values (duplicates merge).
SpectralDistribution point_mass_distribution(const SortedSpectrum& values);

} // namespace spectral
