#include "spectral/util.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <thread>

namespace spectral {

int effective_threads(int requested) {
    if (requested > 0) return requested;
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* cap = std::getenv("SPECTRAL_SKETCH_THREADS")) {
        int c = std::atoi(cap);
        if (c >= 1) hw = std::min(hw, c);
    }
    return hw;
}

void parallel_chunks(std::size_t count, int threads,
                     const std::function<void(std::size_t, std::size_t, int)>& fn) {
    int workers = effective_threads(threads);
    if (count == 0) return;
    if (static_cast<std::size_t>(workers) > count) workers = static_cast<int>(count);
    if (workers <= 1) {
        fn(0, count, 0);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    std::size_t chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        std::size_t begin = static_cast<std::size_t>(w) * chunk;
        std::size_t end = std::min(count, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&, begin, end, w] {
            try {
                fn(begin, end, w);
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

double kahan_total(const std::vector<double>& xs) {
    KahanSum s;
    for (double x : xs) s.add(x);
    return s.value();
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace spectral
