#pragma once

#include <iosfwd>
#include <string>

#include "spectral/distribution.hpp"
#include "spectral/exact.hpp"
#include "spectral/moments.hpp"

namespace spectral {

// Spectrum CSV: one eigenvalue per line, 17 significant digits, no header.
void write_spectrum_csv(std::ostream& out, const SortedSpectrum& s);
void write_spectrum_csv(const std::string& path, const SortedSpectrum& s);
SortedSpectrum read_spectrum_csv(const std::string& path);

// Distribution CSV: header "value,mass", 17 significant digits.
void write_distribution_csv(std::ostream& out, const SpectralDistribution& d);
void write_distribution_csv(const std::string& path, const SpectralDistribution& d);
SpectralDistribution read_distribution_csv(const std::string& path);

// Reads either CSV form, detected by the header line, as a distribution
// (spectra become n equal point masses).
SpectralDistribution read_any_distribution(const std::string& path);

// MomentVector JSON: {"max_order": L, "walks": s, "moments": [...]}.
std::string moments_to_json(const MomentVector& mv);
MomentVector moments_from_json(const std::string& text);

} // namespace spectral
