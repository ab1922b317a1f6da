#include "spectral/dense.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "spectral/error.hpp"

extern "C" {
void dsyevd_(const char* jobz, const char* uplo, const int* n, double* a, const int* lda,
             double* w, double* work, const int* lwork, int* iwork, const int* liwork,
             int* info);
}

namespace spectral {

namespace {

double off_diagonal_frobenius(const SymMatrix& m) {
    double sum = 0.0;
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = i + 1; j < m.n; ++j)
            sum += 2.0 * m.at(i, j) * m.at(i, j);
    return std::sqrt(sum);
}

void sort_by_value(EigenDecomposition& e, std::size_t n) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return e.values[a] < e.values[b]; });
    std::vector<double> values(n);
    std::vector<double> vectors(n * n);
    for (std::size_t k = 0; k < n; ++k) {
        values[k] = e.values[order[k]];
        for (std::size_t i = 0; i < n; ++i) vectors[i * n + k] = e.vectors[i * n + order[k]];
    }
    e.values = std::move(values);
    e.vectors = std::move(vectors);
}

} // namespace

EigenDecomposition jacobi_eigen(const SymMatrix& m) {
    const std::size_t n = m.n;
    SymMatrix a = m;
    EigenDecomposition e;
    e.vectors.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) e.vectors[i * n + i] = 1.0;
    if (n <= 1) {
        e.values.assign(n, n == 1 ? a.at(0, 0) : 0.0);
        return e;
    }

    constexpr double threshold = 1e-10;
    constexpr int max_sweeps = 100;
    bool converged = false;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off_diagonal_frobenius(a) <= threshold) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                double apq = a.at(p, q);
                if (apq == 0.0) continue;
                double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double app = a.at(p, p);
                double aqq = a.at(q, q);
                a.at(p, p) = app - t * apq;
                a.at(q, q) = aqq + t * apq;
                a.at(p, q) = 0.0;
                a.at(q, p) = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    double akp = a.at(k, p);
                    double akq = a.at(k, q);
                    a.at(k, p) = c * akp - s * akq;
                    a.at(p, k) = a.at(k, p);
                    a.at(k, q) = s * akp + c * akq;
                    a.at(q, k) = a.at(k, q);
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double vkp = e.vectors[k * n + p];
                    double vkq = e.vectors[k * n + q];
                    e.vectors[k * n + p] = c * vkp - s * vkq;
                    e.vectors[k * n + q] = s * vkp + c * vkq;
                }
            }
    }
    if (!converged && off_diagonal_frobenius(a) > threshold)
        throw NumericalError("Jacobi eigensolver did not converge within 100 sweeps");

    e.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) e.values[i] = a.at(i, i);
    sort_by_value(e, n);
    return e;
}

EigenDecomposition lapack_eigen(const SymMatrix& m, bool with_vectors) {
    const int n = static_cast<int>(m.n);
    EigenDecomposition e;
    e.values.assign(m.n, 0.0);
    if (n == 0) return e;

    std::vector<double> a = m.a; // symmetric, so row/column-major agree
    char jobz = with_vectors ? 'V' : 'N';
    char uplo = 'L';
    int lwork = -1;
    int liwork = -1;
    int info = 0;
    double work_size = 0.0;
    int iwork_size = 0;
    dsyevd_(&jobz, &uplo, &n, a.data(), &n, e.values.data(), &work_size, &lwork, &iwork_size,
            &liwork, &info);
    if (info != 0)
        throw NumericalError("eigensolver workspace query failed, info=" + std::to_string(info));
    lwork = static_cast<int>(work_size);
    liwork = iwork_size;
    std::vector<double> work(static_cast<std::size_t>(lwork));
    std::vector<int> iwork(static_cast<std::size_t>(liwork));
    dsyevd_(&jobz, &uplo, &n, a.data(), &n, e.values.data(), work.data(), &lwork, iwork.data(),
            &liwork, &info);
    if (info != 0)
        throw NumericalError("eigensolver failed to converge, info=" + std::to_string(info));

    if (with_vectors) {
        // dsyevd returns eigenvectors as columns in column-major storage.
        e.vectors.resize(m.n * m.n);
        for (std::size_t k = 0; k < m.n; ++k)
            for (std::size_t i = 0; i < m.n; ++i)
                e.vectors[i * m.n + k] = a[k * m.n + i];
    }
    return e;
}

std::vector<double> lapack_eigenvalues(const SymMatrix& m) {
    return lapack_eigen(m, false).values;
}

} // namespace spectral
