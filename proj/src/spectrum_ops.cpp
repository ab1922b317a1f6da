#include "spectral/spectrum_ops.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spectral/error.hpp"
#include "spectral/util.hpp"

namespace spectral {

double emd_w1(const SpectralDistribution& p, const SpectralDistribution& q) {
    p.validate(1e-9);
    q.validate(1e-9);
    KahanSum total;
    double fp = 0.0;
    double fq = 0.0;
    double prev = 0.0;
    bool have_prev = false;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < p.size() || j < q.size()) {
        double x;
        if (i < p.size() && j < q.size())
            x = std::min(p.support[i], q.support[j]);
        else
            x = i < p.size() ? p.support[i] : q.support[j];
        if (have_prev) total.add(std::abs(fp - fq) * (x - prev));
        while (i < p.size() && p.support[i] == x) fp += p.masses[i++];
        while (j < q.size() && q.support[j] == x) fq += q.masses[j++];
        prev = x;
        have_prev = true;
    }
    return total.value();
}

double sorted_vector_distance(const SortedSpectrum& a, const SortedSpectrum& b) {
    if (a.size() != b.size())
        throw DataError("sorted vectors have different lengths: " + std::to_string(a.size()) +
                        " vs " + std::to_string(b.size()));
    if (a.empty()) throw DataError("sorted vectors are empty");
    KahanSum total;
    for (std::size_t i = 0; i < a.size(); ++i) total.add(std::abs(a[i] - b[i]));
    return total.value() / static_cast<double>(a.size());
}

SortedSpectrum discretize_spectrum(std::size_t n, const SpectralDistribution& q) {
    if (n < 1) throw DataError("discretization size must be >= 1");
    q.validate(1e-9);

    // Normalized CDF values after each atom; forcing the last to 1 keeps the
    // final quantile band from losing a rounding ulp of mass.
    double total = q.total_mass();
    std::vector<double> cum(q.size());
    KahanSum running;
    for (std::size_t j = 0; j < q.size(); ++j) {
        running.add(q.masses[j] / total);
        cum[j] = running.value();
    }
    cum.back() = 1.0;

    SortedSpectrum out(n);
    std::size_t j = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double lower = static_cast<double>(i) / static_cast<double>(n);
        double upper = static_cast<double>(i + 1) / static_cast<double>(n);
        KahanSum band; // integral of x dq over the band; atoms split fractionally
        for (std::size_t k = j; k < q.size(); ++k) {
            double atom_lo = k == 0 ? 0.0 : cum[k - 1];
            double overlap = std::min(upper, cum[k]) - std::max(lower, atom_lo);
            if (overlap > 0.0) band.add(overlap * q.support[k]);
            if (cum[k] >= upper) break;
            j = k + 1; // atom exhausted before the band ends
        }
        out[i] = band.value() * static_cast<double>(n);
        if (i > 0) out[i] = std::max(out[i], out[i - 1]); // guard rounding dips
    }
    return out;
}

SortedSpectrum union_spectrum(const SortedSpectrum& a, const SortedSpectrum& b) {
    SortedSpectrum out(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), out.begin());
    return out;
}

} // namespace spectral
