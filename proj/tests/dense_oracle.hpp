// Test-only dense-matrix oracle for the circulant ring. Everything here
// works on the materialized n x n matrix, independent of the coefficient-row
// arithmetic it is used to check.
#pragma once

#include <complex>
#include <random>
#include <vector>

#include "rabiwave/circulant.hpp"

#ifdef RABIWAVE_HAVE_EIGEN
#include <Eigen/Eigenvalues>
#endif

namespace oracle {

using cplx = std::complex<double>;
using Dense = std::vector<std::vector<cplx>>;

// row r of the dense form is row 0 cyclically shifted right by r
inline Dense to_dense(const rabiwave::Circulant& c) {
    const int n = c.order();
    Dense m(static_cast<size_t>(n), std::vector<cplx>(static_cast<size_t>(n)));
    for (int r = 0; r < n; ++r)
        for (int j = 0; j < n; ++j)
            m[static_cast<size_t>(r)][static_cast<size_t>((j + r) % n)] = c.coeff(j);
    return m;
}

inline Dense dense_mul(const Dense& a, const Dense& b) {
    const size_t n = a.size();
    Dense out(n, std::vector<cplx>(n, 0.0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            for (size_t j = 0; j < n; ++j)
                out[i][j] += a[i][k] * b[k][j];
    return out;
}

inline double dense_max_diff(const Dense& a, const Dense& b) {
    double m = 0.0;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j)
            m = std::max(m, std::abs(a[i][j] - b[i][j]));
    return m;
}

inline rabiwave::Circulant random_circulant(int n, std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<cplx> coeffs(static_cast<size_t>(n));
    for (auto& c : coeffs) c = {dist(rng), dist(rng)};
    return rabiwave::Circulant(std::move(coeffs));
}

#ifdef RABIWAVE_HAVE_EIGEN
// Unordered spectrum from a general dense solver; greedily matched against
// the expected values by the caller.
inline std::vector<cplx> dense_eigenvalues(const rabiwave::Circulant& c) {
    const int n = c.order();
    Eigen::MatrixXcd m(n, n);
    const Dense d = to_dense(c);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) = d[static_cast<size_t>(i)][static_cast<size_t>(j)];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
    std::vector<cplx> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = solver.eigenvalues()(i);
    return out;
}

// max over expected values of the distance to the closest dense eigenvalue
// (multiset match, both directions)
inline double spectrum_match_error(const std::vector<cplx>& expected,
                                   std::vector<cplx> actual) {
    double worst = 0.0;
    for (const auto& e : expected) {
        double best = 1e300;
        size_t best_i = 0;
        for (size_t i = 0; i < actual.size(); ++i) {
            const double d = std::abs(e - actual[i]);
            if (d < best) {
                best = d;
                best_i = i;
            }
        }
        worst = std::max(worst, best);
        if (!actual.empty()) actual.erase(actual.begin() + static_cast<long>(best_i));
    }
    return worst;
}
#endif

}  // namespace oracle
