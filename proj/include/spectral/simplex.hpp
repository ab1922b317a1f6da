#pragma once

#include <cstddef>
#include <vector>

namespace spectral {

// Dense linear program in standard equality form:
//   minimize c'x  subject to  A x = b, x >= 0.
struct LinearProgram {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> a; // row-major rows x cols
    std::vector<double> b;
    std::vector<double> c;

    double& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    double at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

struct SimplexResult {
    std::vector<double> x;
    double objective = 0.0;
    int iterations = 0;
};

// Two-phase primal simplex on an explicit tableau. Dantzig pricing switches
// to Bland's rule after a stall to rule out cycling; the ratio test keeps
// the iterate feasible by letting every positive column entry bound the step
// and prefers large pivot elements among near-tied rows. The tableau is
// rebuilt from the problem data every 64 pivots to stop roundoff from
// accumulating. Throws NumericalError with iterate diagnostics on
// non-convergence or feasibility loss, DataError if the program is
// infeasible or unbounded.
SimplexResult solve_lp(const LinearProgram& lp, int max_iterations = 50000);

} // namespace spectral
