#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "spectral/error.hpp"
#include "spectral/simplex.hpp"

using spectral::DataError;
using spectral::LinearProgram;

namespace {

LinearProgram make_lp(std::size_t rows, std::size_t cols,
                      std::vector<double> a, std::vector<double> b,
                      std::vector<double> c) {
    LinearProgram lp;
    lp.rows = rows;
    lp.cols = cols;
    lp.a = std::move(a);
    lp.b = std::move(b);
    lp.c = std::move(c);
    return lp;
}

} // namespace

TEST_CASE("solves a known optimum") {
    // min -2x - 3y  s.t.  x + y + s1 = 4,  x + 2y + s2 = 5,  all >= 0.
    auto lp = make_lp(2, 4,
                      {1, 1, 1, 0,
                       1, 2, 0, 1},
                      {4, 5},
                      {-2, -3, 0, 0});
    auto res = spectral::solve_lp(lp);
    CHECK(std::abs(res.objective - (-9.0)) < 1e-9);
    CHECK(std::abs(res.x[0] - 3.0) < 1e-9);
    CHECK(std::abs(res.x[1] - 1.0) < 1e-9);
    CHECK(std::abs(res.x[2]) < 1e-9);
    CHECK(std::abs(res.x[3]) < 1e-9);
}

TEST_CASE("equality constraints are met at the solution") {
    auto lp = make_lp(2, 3,
                      {1, 1, 1,
                       2, 1, 0},
                      {1, 1},
                      {0, -1, 2});
    auto res = spectral::solve_lp(lp);
    for (std::size_t i = 0; i < lp.rows; ++i) {
        double lhs = 0.0;
        for (std::size_t j = 0; j < lp.cols; ++j) lhs += lp.at(i, j) * res.x[j];
        CHECK(std::abs(lhs - lp.b[i]) < 1e-9);
    }
    for (double v : res.x) CHECK(v >= 0.0);
}

TEST_CASE("detects infeasibility") {
    // x + y = 1 and x + y = 3 cannot both hold.
    auto lp = make_lp(2, 2,
                      {1, 1,
                       1, 1},
                      {1, 3},
                      {1, 1});
    CHECK_THROWS_AS(spectral::solve_lp(lp), DataError);
}

TEST_CASE("detects an unbounded objective") {
    // min -x with x - y = 0 lets both grow without limit.
    auto lp = make_lp(1, 2, {1, -1}, {0}, {-1, 0});
    CHECK_THROWS_AS(spectral::solve_lp(lp), DataError);
}

TEST_CASE("handles negative right hand sides") {
    // -x - y = -2 with min x has optimum x=0, y=2.
    auto lp = make_lp(1, 2, {-1, -1}, {-2}, {1, 0});
    auto res = spectral::solve_lp(lp);
    CHECK(std::abs(res.objective) < 1e-9);
    CHECK(std::abs(res.x[0]) < 1e-9);
    CHECK(std::abs(res.x[1] - 2.0) < 1e-9);
}

TEST_CASE("degenerate vertices do not cycle") {
    // Multiple constraints intersect at the optimum x = (0, 0, 1).
    auto lp = make_lp(3, 5,
                      {1, 1, 0, 1, 0,
                       1, 0, 0, 0, 1,
                       0, 0, 1, 0, 0},
                      {0, 0, 1},
                      {1, 1, -1, 0, 0});
    auto res = spectral::solve_lp(lp);
    CHECK(std::abs(res.objective - (-1.0)) < 1e-9);
}

TEST_CASE("random feasible programs solve to verified optima") {
    // Build programs with a known feasible point, then confirm the returned
    // objective is no worse than that of many random feasible points.
    spectral::RngStream rng(505, 0);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t rows = 2 + rng.below(3);
        std::size_t cols = rows + 2 + rng.below(4);
        std::vector<double> a(rows * cols);
        for (auto& v : a) v = 2.0 * rng.unit() - 1.0;
        std::vector<double> x0(cols);
        for (auto& v : x0) v = rng.unit();
        std::vector<double> b(rows, 0.0);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) b[i] += a[i * cols + j] * x0[j];
        std::vector<double> c(cols);
        for (auto& v : c) v = 2.0 * rng.unit() - 1.0;

        auto lp = make_lp(rows, cols, a, b, c);
        spectral::SimplexResult res;
        try {
            res = spectral::solve_lp(lp);
        } catch (const DataError&) {
            continue; // random instance was unbounded
        }

        for (std::size_t i = 0; i < rows; ++i) {
            double lhs = 0.0;
            for (std::size_t j = 0; j < cols; ++j) lhs += lp.at(i, j) * res.x[j];
            CHECK(std::abs(lhs - b[i]) < 1e-7);
        }
        double at_x0 = 0.0;
        for (std::size_t j = 0; j < cols; ++j) at_x0 += c[j] * x0[j];
        CHECK(res.objective <= at_x0 + 1e-8);
    }
}
