#pragma once

// Shared generators and independent numerical oracles for the test suites.
// The oracles deliberately avoid the library's own algorithms: eigenvalues
// come from a two-sided Jacobi iteration built on explicit small matrix
// products, and projector identities are checked with plain triple-loop
// multiplies.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "qpca/matrix.hpp"
#include "qpca/state_vector.hpp"

namespace qtest {

using qpca::Complex;
using qpca::ComplexMatrix;
using qpca::RealMatrix;
using qpca::StateVector;

using Rng = std::mt19937_64;

inline double urand(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline std::size_t index_in(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline std::vector<double> random_vector(Rng& rng, std::size_t n, double lo, double hi) {
    std::vector<double> v(n);
    for (double& x : v) x = urand(rng, lo, hi);
    return v;
}

inline std::vector<double> random_unit_vector(Rng& rng, std::size_t n) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> v(n);
    double norm2 = 0.0;
    do {
        norm2 = 0.0;
        for (double& x : v) {
            x = gauss(rng);
            norm2 += x * x;
        }
    } while (norm2 < 1e-12);
    const double inv = 1.0 / std::sqrt(norm2);
    for (double& x : v) x *= inv;
    return v;
}

inline StateVector random_state(Rng& rng, std::size_t dim) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Complex> amps(dim);
    for (Complex& a : amps) a = Complex{gauss(rng), gauss(rng)};
    return StateVector(std::move(amps)).normalized();
}

/// Random orthonormal set via twice-iterated Gram-Schmidt on Gaussian
/// vectors.
inline std::vector<StateVector> random_orthonormal_states(Rng& rng, std::size_t dim,
                                                          std::size_t count) {
    std::vector<StateVector> basis;
    basis.reserve(count);
    while (basis.size() < count) {
        StateVector cand = random_state(rng, dim);
        std::vector<Complex> amps = cand.amplitudes();
        for (int pass = 0; pass < 2; ++pass) {
            for (const StateVector& b : basis) {
                Complex proj{0.0, 0.0};
                for (std::size_t i = 0; i < dim; ++i) {
                    proj += std::conj(b.amplitude(i)) * amps[i];
                }
                for (std::size_t i = 0; i < dim; ++i) amps[i] -= proj * b.amplitude(i);
            }
        }
        double norm2 = 0.0;
        for (const Complex& a : amps) norm2 += std::norm(a);
        if (norm2 < 1e-8) continue; // rare: candidate fell into the span
        const double inv = 1.0 / std::sqrt(norm2);
        for (Complex& a : amps) a *= inv;
        basis.push_back(StateVector(std::move(amps)));
    }
    return basis;
}

/// Random orthonormal real vectors (rows), same construction.
inline std::vector<std::vector<double>> random_orthonormal_real(Rng& rng, std::size_t n,
                                                                std::size_t count) {
    std::vector<std::vector<double>> basis;
    basis.reserve(count);
    while (basis.size() < count) {
        std::vector<double> cand = random_unit_vector(rng, n);
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& b : basis) {
                double proj = 0.0;
                for (std::size_t i = 0; i < n; ++i) proj += b[i] * cand[i];
                for (std::size_t i = 0; i < n; ++i) cand[i] -= proj * b[i];
            }
        }
        double norm2 = 0.0;
        for (double x : cand) norm2 += x * x;
        if (norm2 < 1e-8) continue;
        const double inv = 1.0 / std::sqrt(norm2);
        for (double& x : cand) x *= inv;
        basis.push_back(std::move(cand));
    }
    return basis;
}

inline RealMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, double lo = -1.0,
                                double hi = 1.0) {
    RealMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = urand(rng, lo, hi);
    return m;
}

// ---- oracles ----

inline ComplexMatrix matmul_oracle(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

inline RealMatrix matmul_oracle(const RealMatrix& a, const RealMatrix& b) {
    RealMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

inline double frobenius(const RealMatrix& a) {
    double sum = 0.0;
    for (double x : a.data()) sum += x * x;
    return std::sqrt(sum);
}

inline RealMatrix gram_matrix(const RealMatrix& a) { // A^T A
    RealMatrix out(a.cols(), a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            double sum = 0.0;
            for (std::size_t r = 0; r < a.rows(); ++r) sum += a(r, i) * a(r, j);
            out(i, j) = sum;
        }
    return out;
}

/// Eigenvalues of a symmetric matrix by cyclic two-sided Jacobi rotations,
/// sorted non-increasing. Rotations are applied as explicit matrix
/// products, which keeps this oracle independent of the library's SVD.
inline std::vector<double> symmetric_eigenvalues_oracle(RealMatrix a) {
    const std::size_t n = a.rows();
    const double scale = std::max(frobenius(a), 1.0);

    auto off_norm = [&a, n] {
        double sum = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q)
                if (p != q) sum += a(p, q) * a(p, q);
        return std::sqrt(sum);
    };

    for (int sweep = 0; sweep < 100 && off_norm() > 1e-13 * scale; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) <= 1e-300) continue;
                const double theta = 0.5 * std::atan2(2.0 * a(p, q), a(q, q) - a(p, p));
                RealMatrix j = RealMatrix::identity(n);
                j(p, p) = std::cos(theta);
                j(q, q) = std::cos(theta);
                j(p, q) = std::sin(theta);
                j(q, p) = -std::sin(theta);
                a = matmul_oracle(matmul_oracle(j.transposed(), a), j);
            }
        }
    }

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
    std::sort(eig.begin(), eig.end(), std::greater<double>());
    return eig;
}

} // namespace qtest
