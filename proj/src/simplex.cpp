#include "spectral/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "spectral/error.hpp"

namespace spectral {

namespace {

constexpr double kReducedTol = 1e-10;  // entering threshold on reduced costs
constexpr double kRatioTol = 1e-11;    // smallest column entry that bounds the step
constexpr double kExpelTol = 1e-9;     // pivot size for forcing artificials out
constexpr double kFeasTol = 1e-7;      // largest rhs violation treated as roundoff
constexpr double kStablePivot = 1e-7;  // preferred lower bound on pivot elements
constexpr double kBasisTol = 1e-9;     // smallest LU pivot an accepted basis may have
constexpr int kRefreshEvery = 8;       // pivots between exact tableau rebuilds

// Dense LU with partial pivoting; enough for the basis sizes used here.
class LuFactor {
public:
    bool factor(std::vector<double> a, std::size_t n, double min_pivot = 1e-12) {
        n_ = n;
        lu_ = std::move(a);
        perm_.resize(n);
        for (std::size_t i = 0; i < n; ++i) perm_[i] = i;
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t pivot = k;
            double best = std::abs(lu_[perm_[k] * n + k]);
            for (std::size_t i = k + 1; i < n; ++i) {
                double cand = std::abs(lu_[perm_[i] * n + k]);
                if (cand > best) {
                    best = cand;
                    pivot = i;
                }
            }
            if (best < min_pivot) return false;
            std::swap(perm_[k], perm_[pivot]);
            double d = lu_[perm_[k] * n + k];
            for (std::size_t i = k + 1; i < n; ++i) {
                double m = lu_[perm_[i] * n + k] / d;
                lu_[perm_[i] * n + k] = m;
                for (std::size_t j = k + 1; j < n; ++j)
                    lu_[perm_[i] * n + j] -= m * lu_[perm_[k] * n + j];
            }
        }
        return true;
    }

    // Solves A x = b.
    std::vector<double> solve(const std::vector<double>& b) const {
        std::vector<double> x(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            double s = b[perm_[i]];
            for (std::size_t j = 0; j < i; ++j) s -= lu_[perm_[i] * n_ + j] * x[j];
            x[i] = s;
        }
        for (std::size_t ii = n_; ii-- > 0;) {
            double s = x[ii];
            for (std::size_t j = ii + 1; j < n_; ++j) s -= lu_[perm_[ii] * n_ + j] * x[j];
            x[ii] = s / lu_[perm_[ii] * n_ + ii];
        }
        return x;
    }

private:
    std::size_t n_ = 0;
    std::vector<double> lu_;
    std::vector<std::size_t> perm_;
};

// Explicit tableau B^{-1}[A | b], updated by row operations and rebuilt from
// the problem data every 64 pivots so roundoff cannot accumulate across a
// long pivot sequence. The rhs column stays nonnegative: tiny excursions are
// clamped, anything past -kFeasTol aborts instead of returning an infeasible
// point. Artificial columns are implicit (the identity) and never re-enter,
// so only original columns are stored.
struct Tableau {
    const LinearProgram* lp = nullptr; // rhs already nonnegative
    std::size_t rows = 0;
    std::size_t cols = 0;    // original columns; basis[r] >= cols is artificial
    std::vector<double> tab; // rows x (cols + 1); last column is the rhs
    std::vector<std::size_t> basis;
    std::vector<char> in_basis; // original columns only
    int iterations = 0;
    int pivots_since_refresh = 0;

    double& at(std::size_t r, std::size_t c) { return tab[r * (cols + 1) + c]; }
    double at(std::size_t r, std::size_t c) const { return tab[r * (cols + 1) + c]; }
    double& rhs(std::size_t r) { return tab[r * (cols + 1) + cols]; }
    double rhs(std::size_t r) const { return tab[r * (cols + 1) + cols]; }

    double original(std::size_t i, std::size_t j) const {
        if (j < cols) return lp->at(i, j);
        return j - cols == i ? 1.0 : 0.0; // artificial block is the identity
    }

    // Clamps small negative rhs entries to zero; reports entries past the
    // tolerance so the caller can rebuild from exact data or give up.
    bool clamp_rhs() {
        bool bad = false;
        for (std::size_t r = 0; r < rows; ++r) {
            if (rhs(r) >= 0.0) continue;
            if (rhs(r) < -kFeasTol) bad = true;
            rhs(r) = 0.0;
        }
        return bad;
    }

    // Rebuilds tab = B^{-1}[A | b] from the problem data and current basis.
    void refresh() {
        LuFactor lu;
        std::vector<double> bm(rows * rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t c = 0; c < rows; ++c) bm[i * rows + c] = original(i, basis[c]);
        if (!lu.factor(std::move(bm), rows))
            throw NumericalError("simplex basis became singular after " +
                                 std::to_string(iterations) + " iterations");
        std::vector<double> col(rows);
        for (std::size_t j = 0; j < cols; ++j) {
            for (std::size_t i = 0; i < rows; ++i) col[i] = lp->at(i, j);
            std::vector<double> sol = lu.solve(col);
            for (std::size_t i = 0; i < rows; ++i) at(i, j) = sol[i];
        }
        std::vector<double> sol = lu.solve(lp->b);
        for (std::size_t i = 0; i < rows; ++i) rhs(i) = sol[i];
        if (clamp_rhs())
            throw NumericalError("simplex lost primal feasibility after " +
                                 std::to_string(iterations) + " iterations");
        pivots_since_refresh = 0;
    }

    // True when swapping column j into row r keeps the basis comfortably
    // regular; the margin over the refresh threshold keeps later rebuilds of
    // an accepted basis from failing.
    bool swap_keeps_basis_regular(std::size_t r, std::size_t j) const {
        std::vector<double> bm(rows * rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t c = 0; c < rows; ++c)
                bm[i * rows + c] = original(i, c == r ? j : basis[c]);
        LuFactor lu;
        return lu.factor(std::move(bm), rows, kBasisTol);
    }

    // Pivots column j into row r by row reduction on the whole tableau.
    void pivot(std::size_t r, std::size_t j) {
        const std::size_t width = cols + 1;
        double* prow = &tab[r * width];
        const double piv = prow[j];
        for (std::size_t c = 0; c < width; ++c) prow[c] /= piv;
        prow[j] = 1.0;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            double* row = &tab[i * width];
            const double f = row[j];
            if (f == 0.0) continue;
            for (std::size_t c = 0; c < width; ++c) row[c] -= f * prow[c];
            row[j] = 0.0;
        }
        if (basis[r] < cols) in_basis[basis[r]] = 0;
        basis[r] = j;
        in_basis[j] = 1;
        // A large excursion means the row operations drifted; the exact
        // rebuild either restores feasibility or proves the basis is bad.
        if (clamp_rhs()) refresh();
        ++pivots_since_refresh;
    }
};

// One simplex phase on the current basis. Dantzig pricing until the objective
// stalls, Bland's rule afterwards. The ratio test lets every meaningfully
// positive entry bound the step and takes the largest pivot element among
// near-tied rows (lowest basis column under Bland). In phase 2 a basic
// artificial joins at step zero whenever the entering column touches its row,
// so leftover artificials are pivoted out for free and can never rise above
// zero. Returns the attained objective.
double run_phase(Tableau& t, const std::vector<double>& cost, bool phase_two,
                 int max_iterations) {
    const std::size_t m = t.rows;
    const std::size_t n = t.cols;
    t.refresh();

    auto basic_cost = [&](std::size_t r) -> double {
        if (t.basis[r] < n) return cost[t.basis[r]];
        return phase_two ? 0.0 : 1.0;
    };

    bool bland = false;
    int stall = 0;
    double last_objective = std::numeric_limits<double>::infinity();

    for (;;) {
        if (t.iterations >= max_iterations)
            throw NumericalError("simplex hit the iteration cap at " +
                                 std::to_string(t.iterations) + " iterations, objective " +
                                 std::to_string(last_objective));
        ++t.iterations;
        if (t.pivots_since_refresh >= kRefreshEvery) t.refresh();

        double objective = 0.0;
        for (std::size_t r = 0; r < m; ++r) objective += basic_cost(r) * t.rhs(r);
        if (objective < last_objective - 1e-12) {
            stall = 0;
        } else if (++stall > 200) {
            bland = true;
        }
        last_objective = objective;

        // Pricing over the original columns; artificials never re-enter.
        std::vector<std::pair<std::size_t, double>> priced; // rows with nonzero basic cost
        priced.reserve(m);
        for (std::size_t r = 0; r < m; ++r) {
            double cb = basic_cost(r);
            if (cb != 0.0) priced.emplace_back(r, cb);
        }
        // Candidate entering columns, most improving first (lowest index
        // first under Bland's rule).
        struct Candidate {
            std::size_t j;
            double reduced;
        };
        std::vector<Candidate> candidates;
        for (std::size_t j = 0; j < n; ++j) {
            if (t.in_basis[j]) continue;
            double reduced = cost[j];
            for (const auto& [r, cb] : priced) reduced -= cb * t.at(r, j);
            if (reduced < -kReducedTol) candidates.push_back({j, reduced});
        }
        if (candidates.empty()) {
            // Only trust optimality read off an exactly rebuilt tableau.
            if (t.pivots_since_refresh > 0) {
                t.refresh();
                continue;
            }
            return last_objective;
        }
        if (!bland)
            std::sort(candidates.begin(), candidates.end(),
                      [](const Candidate& a, const Candidate& b) { return a.reduced < b.reduced; });

        struct Step {
            std::size_t j = 0;
            std::size_t leave = 0;
            double pivot = 0.0;
            bool found = false;
            bool expel = false;
        };

        // Ratio test for one column: the tightest step it permits, with the
        // leaving row picked inside a tie band. Taking a row whose ratio
        // exceeds the minimum by d drives tighter rows negative by up to
        // amax * d, so the band keeps that excursion inside the clamp
        // tolerance; within it, prefer the largest pivot element (the
        // lowest basis column under Bland's rule). In phase 2 a basic
        // artificial joins at step zero whenever the entering column touches
        // its row, so leftover artificials are pivoted out for free and can
        // never rise above zero.
        auto choose_leaving = [&](std::size_t j) {
            Step step;
            step.j = j;
            double best_ratio = std::numeric_limits<double>::infinity();
            double amax = 0.0;
            double bmax = 0.0;
            bool any = false;
            for (std::size_t r = 0; r < m; ++r) {
                double a = t.at(r, j);
                bmax = std::max(bmax, t.rhs(r));
                if (phase_two && t.basis[r] >= n && std::abs(a) > kExpelTol) {
                    best_ratio = 0.0;
                    any = true;
                } else if (a > kRatioTol) {
                    any = true;
                    amax = std::max(amax, a);
                    best_ratio = std::min(best_ratio, t.rhs(r) / a);
                }
            }
            if (!any) return step; // nothing bounds the step along this column
            if (amax <= 0.0) amax = 1.0;
            const double band =
                bland ? 1e-12 * (1.0 + best_ratio) : 1e-9 * (1.0 + bmax) / amax;
            for (std::size_t r = 0; r < m; ++r) {
                double a = t.at(r, j);
                double ratio;
                bool expel = false;
                if (phase_two && t.basis[r] >= n && std::abs(a) > kExpelTol) {
                    ratio = 0.0;
                    expel = true;
                } else if (a > kRatioTol) {
                    ratio = t.rhs(r) / a;
                } else {
                    continue;
                }
                if (ratio > best_ratio + band) continue;
                bool better;
                if (!step.found) {
                    better = true;
                } else if (bland) {
                    better = t.basis[r] < t.basis[step.leave];
                } else {
                    better = std::abs(a) > std::abs(step.pivot) ||
                             (std::abs(a) == std::abs(step.pivot) &&
                              t.basis[r] < t.basis[step.leave]);
                }
                if (better) {
                    step.leave = r;
                    step.pivot = a;
                    step.found = true;
                    step.expel = expel;
                }
            }
            return step;
        };

        // Take the first candidate whose pivot is stable and whose swapped
        // basis stays regular; remember the best small pivot as a fallback.
        // A column nothing bounds certifies an unbounded program in phase 2
        // and is a numerical artifact in phase 1, where the objective is
        // bounded by zero.
        Step chosen;
        Step fallback;
        for (const Candidate& cand : candidates) {
            Step step = choose_leaving(cand.j);
            if (!step.found) {
                if (phase_two) throw DataError("linear program is unbounded");
                continue;
            }
            if (!t.swap_keeps_basis_regular(step.leave, step.j)) continue;
            if (step.expel || std::abs(step.pivot) >= kStablePivot) {
                chosen = step;
                break;
            }
            if (!fallback.found || std::abs(step.pivot) > std::abs(fallback.pivot))
                fallback = step;
        }
        if (chosen.found) {
            t.pivot(chosen.leave, chosen.j);
            continue;
        }

        // Every usable improving column pivots below the stability floor.
        // Rebuild once and re-derive; on an exact tableau accept the best
        // regular small pivot, otherwise stop at the best point the
        // arithmetic supports.
        if (t.pivots_since_refresh > 0) {
            t.refresh();
            continue;
        }
        if (fallback.found) {
            t.pivot(fallback.leave, fallback.j);
            continue;
        }
        return last_objective;
    }
}

} // namespace

SimplexResult solve_lp(const LinearProgram& lp, int max_iterations) {
    const std::size_t m = lp.rows;
    const std::size_t n = lp.cols;
    if (m == 0 || n == 0 || lp.a.size() != m * n || lp.b.size() != m || lp.c.size() != n)
        throw DataError("malformed linear program");

    // Phase 1 needs a nonnegative rhs.
    LinearProgram flipped;
    const LinearProgram* active = &lp;
    bool any_negative = false;
    for (double v : lp.b) any_negative = any_negative || v < 0.0;
    if (any_negative) {
        flipped = lp;
        for (std::size_t i = 0; i < m; ++i)
            if (flipped.b[i] < 0.0) {
                flipped.b[i] = -flipped.b[i];
                for (std::size_t j = 0; j < n; ++j) flipped.at(i, j) = -flipped.at(i, j);
            }
        active = &flipped;
    }

    Tableau t;
    t.lp = active;
    t.rows = m;
    t.cols = n;
    t.tab.assign(m * (n + 1), 0.0);
    t.basis.resize(m);
    for (std::size_t r = 0; r < m; ++r) t.basis[r] = n + r;
    t.in_basis.assign(n, 0);

    // Phase 1: minimize the sum of artificial variables from the
    // all-artificial basis.
    std::vector<double> phase1_cost(n, 0.0);
    double infeasibility = run_phase(t, phase1_cost, false, max_iterations);
    if (infeasibility > 1e-7)
        throw DataError("linear program is infeasible, residual " +
                        std::to_string(infeasibility));

    // Pivot leftover artificials (stuck at zero by degeneracy) out on the
    // largest entry whose swap keeps the basis regular; a row with no usable
    // entry is redundant and keeps its artificial, which phase 2 holds at
    // zero.
    for (std::size_t r = 0; r < m; ++r) {
        if (t.basis[r] < n) continue;
        std::size_t best = n;
        double best_size = kExpelTol;
        for (std::size_t j = 0; j < n; ++j) {
            if (t.in_basis[j]) continue;
            double size = std::abs(t.at(r, j));
            if (size > best_size && t.swap_keeps_basis_regular(r, j)) {
                best_size = size;
                best = j;
            }
        }
        if (best < n) t.pivot(r, best);
    }

    // Phase 2 on the original objective; artificial columns are out of play.
    double objective = run_phase(t, active->c, true, max_iterations);

    SimplexResult result;
    result.x.assign(n, 0.0);
    for (std::size_t r = 0; r < m; ++r)
        if (t.basis[r] < n) result.x[t.basis[r]] = std::max(t.rhs(r), 0.0);
    result.objective = objective;
    result.iterations = t.iterations;
    return result;
}

} // namespace spectral
