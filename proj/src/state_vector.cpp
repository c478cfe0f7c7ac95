#include "qpca/state_vector.hpp"

#include <cmath>
#include <utility>

namespace qpca {

StateVector::StateVector(std::vector<Complex> amplitudes)
    : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty()) {
        throw DimensionError("state vector must have dimension >= 1");
    }
}

StateVector StateVector::basis_state(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw DimensionError("basis index out of range for dimension " + std::to_string(dim));
    }
    std::vector<Complex> amps(dim, Complex{0.0, 0.0});
    amps[index] = Complex{1.0, 0.0};
    return StateVector(std::move(amps));
}

StateVector StateVector::from_real(std::span<const double> values) {
    std::vector<Complex> amps(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) amps[i] = Complex{values[i], 0.0};
    return StateVector(std::move(amps));
}

double StateVector::norm_squared() const {
    double sum = 0.0;
    for (const Complex& a : amplitudes_) sum += std::norm(a);
    return sum;
}

double StateVector::norm() const { return std::sqrt(norm_squared()); }

bool StateVector::is_normalized(double tol) const {
    return std::abs(norm_squared() - 1.0) <= tol;
}

StateVector StateVector::normalized() const {
    const double n = norm();
    if (n == 0.0) {
        throw NormalizationError("cannot normalize the zero vector");
    }
    std::vector<Complex> amps(amplitudes_);
    for (Complex& a : amps) a /= n;
    return StateVector(std::move(amps));
}

Complex inner_product(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("inner product of states with dims " + std::to_string(a.dim()) +
                             " and " + std::to_string(b.dim()));
    }
    Complex sum{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        sum += std::conj(b.amplitude(i)) * a.amplitude(i);
    }
    return sum;
}

StateVector tensor_product(const StateVector& a, const StateVector& b) {
    std::vector<Complex> amps(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) {
            amps[i * b.dim() + j] = a.amplitude(i) * b.amplitude(j);
        }
    }
    return StateVector(std::move(amps));
}

StateVector direct_sum(std::span<const StateVector> states, double scale) {
    if (states.empty()) {
        throw DimensionError("direct sum of an empty list");
    }
    std::size_t total = 0;
    for (const StateVector& s : states) total += s.dim();
    std::vector<Complex> amps;
    amps.reserve(total);
    for (const StateVector& s : states) {
        for (const Complex& a : s.amplitudes()) amps.push_back(a * scale);
    }
    return StateVector(std::move(amps));
}

} // namespace qpca
