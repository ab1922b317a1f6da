#pragma once

#include <cstddef>
#include <vector>

namespace spectral {

// Dense symmetric matrix, row-major, n x n.
struct SymMatrix {
    std::size_t n = 0;
    std::vector<double> a; // size n*n

    double& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
    double at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
    static SymMatrix zero(std::size_t n) { return {n, std::vector<double>(n * n, 0.0)}; }
};

struct EigenDecomposition {
    std::vector<double> values;  // ascending
    std::vector<double> vectors; // column k (row-major n x n) is the k-th eigenvector
};

// Cyclic Jacobi rotations until the off-diagonal Frobenius norm falls below
// 1e-10, capped at 100 sweeps. Dependency-free reference solver; quadratic
// per sweep, only meant for small matrices. Throws NumericalError when the
// cap is hit before convergence.
EigenDecomposition jacobi_eigen(const SymMatrix& m);

// LAPACK dsyevd. Values ascending; with_vectors controls whether vectors are
// computed. Throws NumericalError if the backend reports failure.
EigenDecomposition lapack_eigen(const SymMatrix& m, bool with_vectors);
std::vector<double> lapack_eigenvalues(const SymMatrix& m);

} // namespace spectral
