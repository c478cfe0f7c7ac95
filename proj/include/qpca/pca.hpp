#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qpca/matrix.hpp"

namespace qpca {

/// Singular values at or below this threshold do not count towards the
/// numerical rank.
inline constexpr double kRankThreshold = 1e-10;

/// Training matrix: vertically stacked sample vectors, every row scaled to
/// unit l2 norm at construction.
class DataMatrix {
public:
    std::size_t sample_count() const { return matrix_.rows(); }
    std::size_t feature_count() const { return matrix_.cols(); }
    const RealMatrix& matrix() const { return matrix_; }

    friend DataMatrix build_data_matrix(const std::vector<std::vector<double>>& samples);

private:
    explicit DataMatrix(RealMatrix m) : matrix_(std::move(m)) {}
    RealMatrix matrix_;
};

/// Normalizes every sample to unit norm and stacks them row-wise.
/// Throws DimensionError on ragged input, DegenerateSampleError on a zero
/// sample, NumericalError on non-finite entries.
DataMatrix build_data_matrix(const std::vector<std::vector<double>>& samples);

/// A = U * diag(singular_values) * V^T with U (m x m) and V (n x n)
/// orthogonal and the singular values sorted non-increasing.
struct SvdResult {
    RealMatrix u;
    std::vector<double> singular_values;
    RealMatrix v;
};

/// One-sided Jacobi SVD. Deterministic: fixed sweep order, no randomness.
SvdResult svd(const RealMatrix& a);
SvdResult svd(const DataMatrix& a);

/// Number of singular values above kRankThreshold.
std::size_t numerical_rank(const SvdResult& svd);

/// The leading feature-space directions (right singular vectors) with their
/// singular values. Components are pairwise orthonormal, entries in [-1,1].
struct PrincipalComponents {
    std::vector<std::vector<double>> components;
    std::vector<double> singular_values;

    std::size_t count() const { return components.size(); }
    std::size_t feature_count() const { return components.empty() ? 0 : components[0].size(); }
};

/// First s columns of V paired with the leading singular values. Each
/// component's sign is canonicalized: its largest-magnitude entry (ties
/// broken by lowest index) is made positive, so repeated runs are
/// bit-identical. Throws RankError when s exceeds the numerical rank.
PrincipalComponents extract_components(const SvdResult& svd, std::size_t s);

/// Smallest s with sum_{i<=s} sigma_i^2 / sum sigma_i^2 >= tau.
std::size_t component_count_for_variance(const SvdResult& svd, double tau);

/// Subtracts the column mean from every row. Off-by-default preprocessing
/// for training; the standard pipeline runs SVD on the raw normalized rows.
RealMatrix center_rows(const RealMatrix& m);

} // namespace qpca
