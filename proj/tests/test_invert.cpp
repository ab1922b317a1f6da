#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "oracles.hpp"
#include "spectral/error.hpp"
#include "spectral/invert.hpp"
#include "spectral/moments.hpp"
#include "spectral/spectrum_ops.hpp"

using spectral::DataError;
using spectral::GridSpec;
using spectral::MomentVector;
using spectral::SpectralDistribution;

namespace {

MomentVector make_moments(std::vector<double> values) {
    MomentVector m;
    m.max_order = static_cast<int>(values.size());
    m.values = std::move(values);
    return m;
}

// Exact power moments of a distribution, orders 1..max_order.
std::vector<double> power_moments(const SpectralDistribution& d, int max_order) {
    std::vector<double> out(static_cast<std::size_t>(max_order), 0.0);
    for (int ell = 1; ell <= max_order; ++ell) {
        long double sum = 0.0L;
        for (std::size_t j = 0; j < d.size(); ++j)
            sum += std::pow(static_cast<long double>(d.support[j]), ell) * d.masses[j];
        out[static_cast<std::size_t>(ell - 1)] = static_cast<double>(sum);
    }
    return out;
}

double residual_at(const SpectralDistribution& d, const MomentVector& m) {
    auto got = power_moments(d, m.max_order);
    long double total = 0.0L;
    for (std::size_t i = 0; i < got.size(); ++i)
        total += std::abs(static_cast<long double>(got[i]) - m.values[i]);
    return static_cast<double>(total);
}

} // namespace

TEST_CASE("grid point layout") {
    auto standard = GridSpec{-1.0, 1.0, 0.01}.points();
    REQUIRE(standard.size() == 201);
    CHECK(standard.front() == -1.0);
    CHECK(standard.back() == 1.0);
    CHECK(standard[100] == 0.0);

    auto coarse = GridSpec{0.0, 1.0, 0.3}.points();
    REQUIRE(coarse.size() == 5);
    CHECK(coarse[0] == 0.0);
    CHECK(std::abs(coarse[1] - 0.3) < 1e-15);
    CHECK(std::abs(coarse[2] - 0.6) < 1e-15);
    CHECK(std::abs(coarse[3] - 0.9) < 1e-15);
    CHECK(coarse[4] == 1.0);

    CHECK_THROWS_AS((GridSpec{1.0, -1.0, 0.01}.points()), DataError);
    CHECK_THROWS_AS((GridSpec{-1.0, 1.0, 0.0}.points()), DataError);
    CHECK_THROWS_AS((GridSpec{-1.0, 1.0, 1e-4}.points()), DataError);
}

TEST_CASE("recovers a point mass at zero") {
    auto m = make_moments(std::vector<double>(10, 0.0));
    auto res = spectral::moment_inverse(m, GridSpec{-1.0, 1.0, 0.01});
    CHECK(res.objective <= 1e-8);
    double at_zero = 0.0;
    for (std::size_t j = 0; j < res.distribution.size(); ++j)
        if (res.distribution.support[j] == 0.0) at_zero += res.distribution.masses[j];
    CHECK(at_zero >= 1.0 - 1e-6);
}

TEST_CASE("recovers the two vertex spectrum") {
    auto m = make_moments({0, 1, 0, 1, 0, 1, 0, 1, 0, 1});
    auto res = spectral::moment_inverse(m, GridSpec{-1.0, 1.0, 0.01});
    double at_low = 0.0, at_high = 0.0;
    for (std::size_t j = 0; j < res.distribution.size(); ++j) {
        if (res.distribution.support[j] == -1.0) at_low += res.distribution.masses[j];
        if (res.distribution.support[j] == 1.0) at_high += res.distribution.masses[j];
    }
    CHECK(std::abs(at_low - 0.5) <= 1e-6);
    CHECK(std::abs(at_high - 0.5) <= 1e-6);
}

TEST_CASE("perturbed moments keep the objective small") {
    const double eta = 1e-3;
    std::vector<double> values{0, 1, 0, 1, 0, 1, 0, 1, 0, 1};
    for (auto& v : values) v += eta;
    auto res = spectral::moment_inverse(make_moments(std::move(values)),
                                        GridSpec{-1.0, 1.0, 0.01});
    CHECK(res.objective <= 10.0 * eta + 1e-12);
}

TEST_CASE("returned distribution is simplex feasible and residual-consistent") {
    spectral::RngStream rng(606, 0);
    for (int trial = 0; trial < 10; ++trial) {
        auto q = oracle::random_distribution(8, -1.0, 1.0, rng);
        auto m = make_moments(power_moments(q, 8));
        auto res = spectral::moment_inverse(m, GridSpec{-1.0, 1.0, 0.05});
        CHECK(std::abs(res.distribution.total_mass() - 1.0) <= 1e-9);
        for (double mass : res.distribution.masses) CHECK(mass >= 0.0);
        for (double x : res.distribution.support) {
            CHECK(x >= -1.0);
            CHECK(x <= 1.0);
        }
        CHECK(std::abs(residual_at(res.distribution, m) - res.objective) <= 1e-8);
    }
}

TEST_CASE("exact grid-supported inputs are recovered") {
    spectral::RngStream rng(607, 0);
    auto grid = GridSpec{-1.0, 1.0, 0.01};
    auto xs = grid.points();
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t k = 1 + rng.below(8);
        std::vector<std::pair<double, double>> atoms;
        double total = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            double w = 0.05 + rng.unit();
            atoms.emplace_back(xs[rng.below(xs.size())], w);
            total += w;
        }
        for (auto& a : atoms) a.second /= total;
        auto truth = spectral::distribution_from_atoms(std::move(atoms));
        {
            double fix = truth.total_mass();
            for (double& mass : truth.masses) mass /= fix;
        }
        int order = static_cast<int>(2 * truth.size());
        auto res = spectral::moment_inverse(make_moments(power_moments(truth, order)), grid);
        CHECK(res.objective <= 1e-7);
        CHECK(spectral::emd_w1(res.distribution, truth) <= 0.02);
    }
}

TEST_CASE("no random feasible point beats the optimum") {
    spectral::RngStream rng(608, 0);
    auto grid = GridSpec{-1.0, 1.0, 0.05};
    auto xs = grid.points();
    for (int trial = 0; trial < 15; ++trial) {
        auto q = oracle::random_distribution(6, -1.0, 1.0, rng);
        auto m = make_moments(power_moments(q, 6));
        // Leave the truth off-grid half the time by perturbing the moments.
        if (trial % 2 == 0)
            for (auto& v : m.values) v += 0.01 * (2.0 * rng.unit() - 1.0);
        auto res = spectral::moment_inverse(m, grid);

        for (int probe = 0; probe < 100; ++probe) {
            std::vector<double> p(xs.size());
            double total = 0.0;
            for (auto& w : p) {
                w = -std::log(1.0 - rng.unit());
                total += w;
            }
            SpectralDistribution candidate;
            candidate.support = xs;
            candidate.masses = p;
            for (double& mass : candidate.masses) mass /= total;
            CHECK(residual_at(candidate, m) >= res.objective - 1e-8);
        }
    }
}

TEST_CASE("truth on the grid never beats the optimum") {
    spectral::RngStream rng(609, 0);
    auto grid = GridSpec{-1.0, 1.0, 0.05};
    auto xs = grid.points();
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t k = 1 + rng.below(6);
        std::vector<std::pair<double, double>> atoms;
        double total = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            double w = 0.05 + rng.unit();
            atoms.emplace_back(xs[rng.below(xs.size())], w);
            total += w;
        }
        for (auto& a : atoms) a.second /= total;
        auto truth = spectral::distribution_from_atoms(std::move(atoms));
        double fix = truth.total_mass();
        for (double& mass : truth.masses) mass /= fix;

        auto m = make_moments(power_moments(truth, 6));
        for (auto& v : m.values) v += 0.005 * (2.0 * rng.unit() - 1.0);
        auto res = spectral::moment_inverse(m, grid);
        CHECK(residual_at(truth, m) >= res.objective - 1e-8);
    }
}

TEST_CASE("moment inverse input validation") {
    CHECK_THROWS_AS(spectral::moment_inverse(make_moments({}), GridSpec{-1, 1, 0.01}),
                    DataError);
    MomentVector bad;
    bad.max_order = 3;
    bad.values = {0.0, 0.0};
    CHECK_THROWS_AS(spectral::moment_inverse(bad, GridSpec{-1, 1, 0.01}), DataError);
}

TEST_CASE("averaging distributions") {
    auto d0 = spectral::point_mass_distribution({0.0});
    auto d1 = spectral::point_mass_distribution({1.0});
    auto avg = spectral::average_distributions({d0, d1});
    REQUIRE(avg.size() == 2);
    CHECK(avg.masses[0] == 0.5);
    CHECK(avg.masses[1] == 0.5);

    auto same = spectral::average_distributions({d0, d0, d0});
    CHECK(same.size() == 1);
    CHECK(same.masses[0] == 1.0);
    CHECK(same.support[0] == 0.0);

    CHECK_THROWS_AS(spectral::average_distributions({}), DataError);

    spectral::RngStream rng(610, 0);
    for (int trial = 0; trial < 50; ++trial) {
        auto p = oracle::random_distribution(10, 0.0, 2.0, rng);
        auto q = oracle::random_distribution(10, 0.0, 2.0, rng);
        auto mix = spectral::average_distributions({p, q});
        CHECK(std::abs(mix.total_mass() - 1.0) <= 1e-12);
        CHECK(spectral::emd_w1(mix, p) <= spectral::emd_w1(q, p) + 1e-12);
    }
}

TEST_CASE("walk to laplacian mapping") {
    auto ends = spectral::distribution_from_atoms({{-1.0, 0.5}, {1.0, 0.5}});
    auto mapped = spectral::walk_to_laplacian(ends);
    REQUIRE(mapped.size() == 2);
    CHECK(mapped.support[0] == 0.0);
    CHECK(mapped.support[1] == 2.0);
    CHECK(mapped.masses[0] == 0.5);
    CHECK(mapped.masses[1] == 0.5);

    auto delta = spectral::walk_to_laplacian(spectral::point_mass_distribution({1.0}));
    CHECK(delta.size() == 1);
    CHECK(delta.support[0] == 0.0);

    // Support within the 1e-9 tolerance band is clamped into [0, 2].
    auto nudged = spectral::walk_to_laplacian(
        spectral::distribution_from_atoms({{-1.0 - 5e-10, 0.5}, {1.0 + 5e-10, 0.5}}));
    CHECK(nudged.support.front() == 0.0);
    CHECK(nudged.support.back() == 2.0);

    CHECK_THROWS_AS(
        spectral::walk_to_laplacian(spectral::point_mass_distribution({1.1})), DataError);
    CHECK_THROWS_AS(
        spectral::walk_to_laplacian(spectral::point_mass_distribution({-1.1})), DataError);
}
