#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace spectral {

// Worker count for parallel sections: `requested` if positive, otherwise
// hardware concurrency capped by the SPECTRAL_SKETCH_THREADS env var.
int effective_threads(int requested = 0);

// Runs fn(chunk_begin, chunk_end, worker_index) over [0, count) split into
// contiguous chunks, one worker per chunk. Falls back to a plain call when a
// single worker suffices. Exceptions from workers are rethrown.
void parallel_chunks(std::size_t count, int threads,
                     const std::function<void(std::size_t, std::size_t, int)>& fn);

// Compensated summation; keeps long reductions stable.
class KahanSum {
public:
    void add(double x) {
        double y = x - carry_;
        double t = sum_ + y;
        carry_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

double kahan_total(const std::vector<double>& xs);

// Shortest decimal form that round-trips a double (17 significant digits).
std::string format_double(double x);

} // namespace spectral
