#include "spectral/invert.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "spectral/error.hpp"
#include "spectral/simplex.hpp"
#include "spectral/util.hpp"

namespace spectral {

std::vector<double> GridSpec::points() const {
    if (!(lo < hi)) throw DataError("grid needs lo < hi");
    if (!(spacing > 0.0)) throw DataError("grid spacing must be positive");
    auto t = static_cast<std::size_t>(std::ceil((hi - lo) / spacing - 1e-9));
    if (t < 1) throw DataError("grid has no interior points");
    if (t + 1 > 10000) throw DataError("grid has " + std::to_string(t + 1) +
                                       " points, over the 10^4 limit");
    std::vector<double> xs(t + 1);
    for (std::size_t i = 0; i <= t; ++i)
        xs[i] = std::min(lo + static_cast<double>(i) * spacing, hi);
    xs[t] = hi;
    return xs;
}

MomentInverseResult moment_inverse(const MomentVector& moments, const GridSpec& grid) {
    if (moments.max_order < 1 || moments.values.empty())
        throw DataError("moment vector is empty");
    if (moments.values.size() != static_cast<std::size_t>(moments.max_order))
        throw DataError("moment vector length disagrees with max_order");
    const std::vector<double> xs = grid.points();
    const std::size_t points = xs.size();
    const auto order = static_cast<std::size_t>(moments.max_order);

    // Variables: p_0..p_{t} (masses), then per moment a residual bound u_ell
    // and surplus slacks s+_ell, s-_ell turning |(Vp)_ell - m_ell| <= u_ell
    // into equalities. Objective: sum of u_ell.
    //   row 0:          sum_j p_j = 1
    //   row 1+2ell:     (Vp)_ell - u_ell + s+_ell = m_ell
    //   row 2+2ell:     (Vp)_ell + u_ell - s-_ell = m_ell
    const std::size_t cols = points + 3 * order;
    const std::size_t rows = 1 + 2 * order;
    LinearProgram lp;
    lp.rows = rows;
    lp.cols = cols;
    lp.a.assign(rows * cols, 0.0);
    lp.b.assign(rows, 0.0);
    lp.c.assign(cols, 0.0);

    for (std::size_t j = 0; j < points; ++j) lp.at(0, j) = 1.0;
    lp.b[0] = 1.0;
    std::vector<double> power(points, 1.0);
    for (std::size_t ell = 0; ell < order; ++ell) {
        for (std::size_t j = 0; j < points; ++j) {
            power[j] *= xs[j];
            lp.at(1 + 2 * ell, j) = power[j];
            lp.at(2 + 2 * ell, j) = power[j];
        }
        lp.at(1 + 2 * ell, points + ell) = -1.0;            // -u_ell
        lp.at(1 + 2 * ell, points + order + ell) = 1.0;     // +s+_ell
        lp.at(2 + 2 * ell, points + ell) = 1.0;             // +u_ell
        lp.at(2 + 2 * ell, points + 2 * order + ell) = -1.0; // -s-_ell
        lp.b[1 + 2 * ell] = moments.values[ell];
        lp.b[2 + 2 * ell] = moments.values[ell];
        lp.c[points + ell] = 1.0;
    }

    SimplexResult solved = solve_lp(lp);

    std::vector<std::pair<double, double>> atoms;
    KahanSum total;
    for (std::size_t j = 0; j < points; ++j) {
        double mass = solved.x[j];
        if (mass <= 0.0) continue;
        atoms.emplace_back(xs[j], mass);
        total.add(mass);
    }
    // The vertex solution satisfies sum p = 1 to solver precision; rescale the
    // kept masses so downstream checks see exactly 1.
    MomentInverseResult result;
    result.distribution = distribution_from_atoms(std::move(atoms));
    for (double& mass : result.distribution.masses) mass /= total.value();

    // Recompute the residual from the returned masses rather than trusting the
    // solver's running objective.
    KahanSum objective;
    for (std::size_t ell = 0; ell < order; ++ell) {
        KahanSum vp;
        for (std::size_t j = 0; j < result.distribution.size(); ++j)
            vp.add(std::pow(result.distribution.support[j], static_cast<double>(ell + 1)) *
                   result.distribution.masses[j]);
        objective.add(std::abs(vp.value() - moments.values[ell]));
    }
    result.objective = objective.value();
    result.iterations = solved.iterations;
    return result;
}

SpectralDistribution average_distributions(const std::vector<SpectralDistribution>& ds) {
    if (ds.empty()) throw DataError("cannot average zero distributions");
    std::vector<std::pair<double, double>> atoms;
    double weight = 1.0 / static_cast<double>(ds.size());
    for (const auto& d : ds) {
        d.validate();
        for (std::size_t i = 0; i < d.size(); ++i)
            atoms.emplace_back(d.support[i], d.masses[i] * weight);
    }
    SpectralDistribution out = distribution_from_atoms(std::move(atoms));
    double total = out.total_mass();
    for (double& mass : out.masses) mass /= total;
    return out;
}

SpectralDistribution walk_to_laplacian(const SpectralDistribution& d) {
    d.validate();
    if (d.support.front() < -1.0 - 1e-9 || d.support.back() > 1.0 + 1e-9)
        throw DataError("walk-matrix support leaves [-1, 1]");
    // Clamping the tolerance band can collide neighbors, so rebuild from atoms.
    std::vector<std::pair<double, double>> atoms;
    atoms.reserve(d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        atoms.emplace_back(std::clamp(1.0 - d.support[i], 0.0, 2.0), d.masses[i]);
    return distribution_from_atoms(std::move(atoms));
}

} // namespace spectral
