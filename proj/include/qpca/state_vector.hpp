#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "qpca/errors.hpp"
#include "qpca/matrix.hpp"

namespace qpca {

/// |norm^2 - 1| bound below which a state counts as normalized.
inline constexpr double kStateNormTolerance = 1e-12;
/// Entrywise bound for operator identities (idempotency, Hermiticity,
/// pairwise orthonormality of spanning sets).
inline constexpr double kOperatorTolerance = 1e-10;

/// Pure state over a finite-dimensional Hilbert space: an ordered vector of
/// complex amplitudes. Immutable after construction.
class StateVector {
public:
    explicit StateVector(std::vector<Complex> amplitudes);

    /// |index> in the given dimension.
    static StateVector basis_state(std::size_t dim, std::size_t index);
    static StateVector from_real(std::span<const double> values);

    std::size_t dim() const { return amplitudes_.size(); }
    const std::vector<Complex>& amplitudes() const { return amplitudes_; }
    Complex amplitude(std::size_t i) const { return amplitudes_[i]; }

    double norm_squared() const;
    double norm() const;
    bool is_normalized(double tol = kStateNormTolerance) const;

    /// Unit-norm copy. Throws NormalizationError on the zero vector.
    StateVector normalized() const;

    bool operator==(const StateVector&) const = default;

private:
    std::vector<Complex> amplitudes_;
};

/// Sum_i conj(b_i) * a_i. Conjugate-symmetric in its arguments.
Complex inner_product(const StateVector& a, const StateVector& b);

/// Joint state of two systems; entry (i*b.dim + j) = a_i * b_j.
StateVector tensor_product(const StateVector& a, const StateVector& b);

/// Concatenation of the inputs, each amplitude multiplied by `scale`.
/// With scale = 1/sqrt(count) and normalized inputs the result is normalized.
StateVector direct_sum(std::span<const StateVector> states, double scale);

} // namespace qpca
