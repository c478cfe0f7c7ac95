#include "qpca/projector.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace qpca {

namespace {

void check_orthonormal(const std::vector<StateVector>& basis) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i; j < basis.size(); ++j) {
            const Complex g = inner_product(basis[i], basis[j]);
            const double expected = (i == j) ? 1.0 : 0.0;
            if (std::abs(g - Complex{expected, 0.0}) > kOperatorTolerance) {
                throw NormalizationError("projector spanning set is not orthonormal");
            }
        }
    }
}

} // namespace

ProjectorOperator ProjectorOperator::span(std::vector<StateVector> basis) {
    if (basis.empty()) {
        throw DimensionError("projector span needs at least one vector");
    }
    const std::size_t dim = basis.front().dim();
    for (const StateVector& v : basis) {
        if (v.dim() != dim) {
            throw DimensionError("projector spanning vectors have mixed dimensions");
        }
    }
    if (basis.size() > dim) {
        throw DimensionError("spanning set larger than the ambient dimension");
    }
    check_orthonormal(basis);
    ProjectorOperator p;
    p.basis_ = std::move(basis);
    p.dim_ = dim;
    return p;
}

ProjectorOperator ProjectorOperator::basis_state(std::size_t dim, std::size_t index) {
    std::vector<StateVector> basis;
    basis.push_back(StateVector::basis_state(dim, index));
    return span(std::move(basis));
}

ProjectorOperator ProjectorOperator::identity(std::size_t dim) {
    if (dim == 0) {
        throw DimensionError("identity projector needs dimension >= 1");
    }
    // Complement of the empty span.
    ProjectorOperator p;
    p.dim_ = dim;
    p.complemented_ = true;
    return p;
}

ProjectorOperator ProjectorOperator::from_dense(ComplexMatrix m) {
    if (m.rows() == 0 || m.rows() != m.cols()) {
        throw DimensionError("dense projector must be a non-empty square matrix");
    }
    const std::size_t d = m.rows();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            if (std::abs(m(i, j) - std::conj(m(j, i))) > kOperatorTolerance) {
                throw NumericalError("dense projector is not Hermitian");
            }
        }
    }
    // P^2 = P, using Hermiticity: (P^2)(i,j) = row_i . conj(row_j).
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
            Complex sum{0.0, 0.0};
            const Complex* ri = m.row_data(i);
            const Complex* rj = m.row_data(j);
            for (std::size_t t = 0; t < d; ++t) sum += ri[t] * std::conj(rj[t]);
            if (std::abs(sum - m(i, j)) > kOperatorTolerance) {
                throw NumericalError("dense projector is not idempotent");
            }
        }
    }
    ProjectorOperator p;
    p.matrix_ = std::move(m);
    p.dim_ = d;
    return p;
}

std::size_t ProjectorOperator::rank() const {
    if (matrix_) {
        double tr = 0.0;
        for (std::size_t i = 0; i < dim_; ++i) tr += matrix_->operator()(i, i).real();
        return static_cast<std::size_t>(std::llround(tr));
    }
    return complemented_ ? dim_ - basis_.size() : basis_.size();
}

ProjectorOperator ProjectorOperator::complement() const {
    ProjectorOperator p;
    p.dim_ = dim_;
    if (matrix_) {
        ComplexMatrix c = ComplexMatrix::identity(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) c(i, j) -= matrix_->operator()(i, j);
        p.matrix_ = std::move(c);
        return p;
    }
    p.basis_ = basis_;
    p.complemented_ = !complemented_;
    return p;
}

double ProjectorOperator::expectation(const StateVector& phi) const {
    if (phi.dim() != dim_) {
        throw DimensionError("projector dimension " + std::to_string(dim_) +
                             " does not match state dimension " + std::to_string(phi.dim()));
    }
    if (matrix_) {
        Complex acc{0.0, 0.0};
        for (std::size_t i = 0; i < dim_; ++i) {
            Complex row{0.0, 0.0};
            const Complex* ri = matrix_->row_data(i);
            for (std::size_t j = 0; j < dim_; ++j) row += ri[j] * phi.amplitude(j);
            acc += std::conj(phi.amplitude(i)) * row;
        }
        return acc.real();
    }
    double mass = 0.0;
    for (const StateVector& v : basis_) mass += std::norm(inner_product(phi, v));
    return complemented_ ? phi.norm_squared() - mass : mass;
}

StateVector ProjectorOperator::apply(const StateVector& phi) const {
    if (phi.dim() != dim_) {
        throw DimensionError("projector dimension " + std::to_string(dim_) +
                             " does not match state dimension " + std::to_string(phi.dim()));
    }
    if (matrix_) {
        std::vector<Complex> out(dim_, Complex{0.0, 0.0});
        for (std::size_t i = 0; i < dim_; ++i) {
            Complex row{0.0, 0.0};
            const Complex* ri = matrix_->row_data(i);
            for (std::size_t j = 0; j < dim_; ++j) row += ri[j] * phi.amplitude(j);
            out[i] = row;
        }
        return StateVector(std::move(out));
    }
    std::vector<Complex> out(dim_, Complex{0.0, 0.0});
    for (const StateVector& v : basis_) {
        const Complex coeff = inner_product(phi, v); // <v|phi>
        for (std::size_t i = 0; i < dim_; ++i) out[i] += coeff * v.amplitude(i);
    }
    if (complemented_) {
        for (std::size_t i = 0; i < dim_; ++i) out[i] = phi.amplitude(i) - out[i];
    }
    return StateVector(std::move(out));
}

ComplexMatrix ProjectorOperator::dense(std::size_t max_dim) const {
    if (dim_ > max_dim) {
        throw DimensionError("refusing to materialize a dense projector of dimension " +
                             std::to_string(dim_) + " (limit " + std::to_string(max_dim) + ")");
    }
    if (matrix_) return *matrix_;
    ComplexMatrix m = complemented_ ? ComplexMatrix::identity(dim_) : ComplexMatrix(dim_, dim_);
    const double sign = complemented_ ? -1.0 : 1.0;
    for (const StateVector& v : basis_) {
        for (std::size_t i = 0; i < dim_; ++i) {
            const Complex vi = v.amplitude(i);
            if (vi == Complex{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                m(i, j) += sign * vi * std::conj(v.amplitude(j));
            }
        }
    }
    return m;
}

double outcome_probability(const ProjectorOperator& p, const StateVector& phi) {
    if (!phi.is_normalized()) {
        throw NormalizationError("measurement requires a normalized state");
    }
    return std::clamp(p.expectation(phi), 0.0, 1.0);
}

MeasurementOutcome collapse(const ProjectorOperator& p, const StateVector& phi,
                            std::string label) {
    const double prob = outcome_probability(p, phi);
    if (prob <= 0.0) {
        throw ZeroProbabilityError("cannot collapse onto an outcome of probability zero");
    }
    const StateVector projected = p.apply(phi);
    const double inv = 1.0 / std::sqrt(prob);
    std::vector<Complex> amps(projected.amplitudes());
    for (Complex& a : amps) a *= inv;
    return MeasurementOutcome{std::move(label), prob, StateVector(std::move(amps))};
}

} // namespace qpca
