#include "spectral/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spectral/error.hpp"
#include "spectral/util.hpp"

namespace spectral {

double SpectralDistribution::total_mass() const { return kahan_total(masses); }

double SpectralDistribution::mean() const {
    KahanSum s;
    for (std::size_t i = 0; i < support.size(); ++i) s.add(support[i] * masses[i]);
    return s.value();
}

void SpectralDistribution::validate(double tol) const {
    if (support.size() != masses.size())
        throw DataError("distribution support and mass lengths differ");
    if (support.empty()) throw DataError("distribution is empty");
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (!std::isfinite(support[i]) || !std::isfinite(masses[i]))
            throw DataError("distribution has a non-finite entry");
        if (masses[i] < 0.0) throw DataError("distribution has a negative mass");
        if (i > 0 && support[i] <= support[i - 1])
            throw DataError("distribution support is not strictly increasing");
    }
    double total = total_mass();
    if (std::abs(total - 1.0) > tol)
        throw DataError("distribution mass sums to " + format_double(total) + ", expected 1");
}

SpectralDistribution distribution_from_atoms(std::vector<std::pair<double, double>> atoms) {
    std::sort(atoms.begin(), atoms.end());
    SpectralDistribution d;
    for (const auto& [x, w] : atoms) {
        if (!d.support.empty() && d.support.back() == x) {
            d.masses.back() += w;
        } else {
            d.support.push_back(x);
            d.masses.push_back(w);
        }
    }
    std::size_t kept = 0;
    for (std::size_t i = 0; i < d.support.size(); ++i) {
        if (d.masses[i] == 0.0) continue;
        d.support[kept] = d.support[i];
        d.masses[kept] = d.masses[i];
        ++kept;
    }
    d.support.resize(kept);
    d.masses.resize(kept);
    return d;
}

SpectralDistribution point_mass_distribution(const SortedSpectrum& values) {
    if (values.empty()) throw DataError("empty spectrum has no distribution");
    std::vector<std::pair<double, double>> atoms;
    atoms.reserve(values.size());
    double w = 1.0 / static_cast<double>(values.size());
    for (double v : values) atoms.emplace_back(v, w);
    return distribution_from_atoms(std::move(atoms));
}

} // namespace spectral
