#pragma once

#include <stdexcept>
#include <string>

namespace spectral {

// Invalid or inconsistent input: malformed files, bad parameters, unnormalized
// distributions. CLI maps this to exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure inside an algorithm: solver non-convergence, eigensolver
// breakdown. CLI maps this to exit code 3.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace spectral
