#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qpca/matrix.hpp"
#include "qpca/state_vector.hpp"

namespace qpca {

/// Largest ambient dimension for which a dense matrix is materialized.
inline constexpr std::size_t kDenseDimLimit = 4096;

/// Orthogonal projector onto a subspace. The default representation is the
/// implicit Gram form: an orthonormal spanning set, optionally complemented
/// (1 - P). Expectation values and applications then cost O(rank * dim) and
/// never touch a matrix. A dense Hermitian matrix form exists for small
/// ambient dimensions, constructed on request.
class ProjectorOperator {
public:
    /// Projector onto span{basis}. Vectors must be pairwise orthonormal
    /// within kOperatorTolerance.
    static ProjectorOperator span(std::vector<StateVector> basis);

    /// |index><index| in the given dimension.
    static ProjectorOperator basis_state(std::size_t dim, std::size_t index);

    static ProjectorOperator identity(std::size_t dim);

    /// Wraps an explicit matrix; validates P = P^dagger and P^2 = P within
    /// kOperatorTolerance.
    static ProjectorOperator from_dense(ComplexMatrix p);

    std::size_t dim() const { return dim_; }

    /// Rank of the projected subspace (dim - span size when complemented).
    std::size_t rank() const;

    /// 1 - P, staying in the same representation family.
    ProjectorOperator complement() const;

    /// <phi|P|phi>. No normalization requirement on phi.
    double expectation(const StateVector& phi) const;

    /// P|phi>, unnormalized.
    StateVector apply(const StateVector& phi) const;

    /// Dense matrix form. Refused above `max_dim` ambient dimensions.
    ComplexMatrix dense(std::size_t max_dim = kDenseDimLimit) const;

private:
    ProjectorOperator() = default;

    std::vector<StateVector> basis_; // orthonormal spanning set (Gram form)
    std::optional<ComplexMatrix> matrix_;
    std::size_t dim_ = 0;
    bool complemented_ = false;
};

/// Result of measuring one outcome's projector against a state.
struct MeasurementOutcome {
    std::string label;
    double probability = 0.0;
    StateVector post_state;
};

/// <phi|P|phi> for a normalized phi, clamped into [0,1].
/// Throws NormalizationError when phi is not normalized.
double outcome_probability(const ProjectorOperator& p, const StateVector& phi);

/// Projects phi onto the outcome's subspace and renormalizes:
/// post = P|phi> / <phi|P|phi>^(1/2).
/// Throws ZeroProbabilityError when the outcome has probability zero.
MeasurementOutcome collapse(const ProjectorOperator& p, const StateVector& phi,
                            std::string label = {});

} // namespace qpca
