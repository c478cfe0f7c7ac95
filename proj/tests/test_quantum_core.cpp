#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qpca/projector.hpp"
#include "qpca/state_vector.hpp"
#include "test_support.hpp"

using namespace qpca;
using qtest::Rng;

namespace {

StateVector real_state(std::initializer_list<double> values) {
    return StateVector::from_real(std::vector<double>(values));
}

} // namespace

TEST_CASE("inner product on basis states") {
    const StateVector zero = StateVector::basis_state(2, 0);
    const StateVector one = StateVector::basis_state(2, 1);
    CHECK(inner_product(zero, zero) == Complex{1.0, 0.0});
    CHECK(inner_product(zero, one) == Complex{0.0, 0.0});
}

TEST_CASE("inner product sums conj(b_i) * a_i") {
    const StateVector a = real_state({0.6, 0.8});
    const StateVector b = real_state({0.8, 0.6});
    // Hand evaluation: 0.8*0.6 + 0.6*0.8 = 0.96.
    CHECK(inner_product(a, b).real() == doctest::Approx(0.96).epsilon(1e-15));
    CHECK(inner_product(a, b).imag() == 0.0);
}

TEST_CASE("inner product is conjugate symmetric") {
    Rng rng(71001);
    for (int it = 0; it < 50; ++it) {
        const std::size_t dim = qtest::index_in(rng, 1, 16);
        const StateVector a = qtest::random_state(rng, dim);
        const StateVector b = qtest::random_state(rng, dim);
        const Complex ab = inner_product(a, b);
        const Complex ba = inner_product(b, a);
        CHECK(std::abs(ab - std::conj(ba)) < 1e-14);
    }
}

TEST_CASE("inner product rejects mismatched dimensions") {
    CHECK_THROWS_AS(inner_product(real_state({1.0, 0.0}), real_state({1.0, 0.0, 0.0})),
                    DimensionError);
}

TEST_CASE("tensor product layout") {
    const StateVector z2 = StateVector::basis_state(2, 0);
    SUBCASE("|0> x |0>") {
        const StateVector joint = tensor_product(z2, z2);
        CHECK(joint.amplitudes() ==
              std::vector<Complex>{{1, 0}, {0, 0}, {0, 0}, {0, 0}});
    }
    SUBCASE("identity-like left factor") {
        const StateVector joint = tensor_product(z2, real_state({0.6, 0.8}));
        CHECK(joint.amplitudes() ==
              std::vector<Complex>{{0.6, 0}, {0.8, 0}, {0, 0}, {0, 0}});
    }
    SUBCASE("hand-expanded product") {
        const StateVector joint = tensor_product(real_state({0.6, 0.8}), real_state({0.8, 0.6}));
        // (0.6, 0.8) x (0.8, 0.6) = (0.48, 0.36, 0.64, 0.48)
        REQUIRE(joint.dim() == 4);
        CHECK(joint.amplitude(0).real() == doctest::Approx(0.48).epsilon(1e-15));
        CHECK(joint.amplitude(1).real() == doctest::Approx(0.36).epsilon(1e-15));
        CHECK(joint.amplitude(2).real() == doctest::Approx(0.64).epsilon(1e-15));
        CHECK(joint.amplitude(3).real() == doctest::Approx(0.48).epsilon(1e-15));
    }
}

TEST_CASE("direct sum concatenates and scales") {
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    SUBCASE("single summand") {
        const std::vector<StateVector> states{real_state({1.0, 0.0})};
        CHECK(direct_sum(states, 1.0).amplitudes() == std::vector<Complex>{{1, 0}, {0, 0}});
    }
    SUBCASE("two basis summands") {
        const std::vector<StateVector> states{StateVector::basis_state(2, 0),
                                              StateVector::basis_state(2, 1)};
        const StateVector sum = direct_sum(states, inv_sqrt2);
        CHECK(sum.amplitude(0).real() == doctest::Approx(inv_sqrt2).epsilon(1e-15));
        CHECK(sum.amplitude(1) == Complex{0.0, 0.0});
        CHECK(sum.amplitude(2) == Complex{0.0, 0.0});
        CHECK(sum.amplitude(3).real() == doctest::Approx(inv_sqrt2).epsilon(1e-15));
        CHECK(sum.is_normalized());
    }
    SUBCASE("concatenate then scale by hand") {
        const std::vector<StateVector> states{real_state({0.6, 0.8}), real_state({1.0, 0.0})};
        const StateVector sum = direct_sum(states, inv_sqrt2);
        CHECK(sum.amplitude(0).real() == doctest::Approx(0.6 * inv_sqrt2).epsilon(1e-15));
        CHECK(sum.amplitude(1).real() == doctest::Approx(0.8 * inv_sqrt2).epsilon(1e-15));
        CHECK(sum.amplitude(2).real() == doctest::Approx(inv_sqrt2).epsilon(1e-15));
        CHECK(sum.amplitude(3) == Complex{0.0, 0.0});
        CHECK(sum.is_normalized());
    }
    SUBCASE("empty list is rejected") {
        CHECK_THROWS_AS(direct_sum(std::vector<StateVector>{}, 1.0), DimensionError);
    }
}

TEST_CASE("tensor and direct-sum dimension bookkeeping") {
    Rng rng(71002);
    for (int it = 0; it < 100; ++it) {
        const std::size_t da = qtest::index_in(rng, 1, 16);
        const std::size_t db = qtest::index_in(rng, 1, 16);
        const StateVector a = qtest::random_state(rng, da);
        const StateVector b = qtest::random_state(rng, db);

        const StateVector joint = tensor_product(a, b);
        REQUIRE(joint.dim() == da * db);
        const std::size_t i = qtest::index_in(rng, 0, da - 1);
        const std::size_t j = qtest::index_in(rng, 0, db - 1);
        CHECK(std::abs(joint.amplitude(i * db + j) - a.amplitude(i) * b.amplitude(j)) < 1e-15);
        CHECK(joint.is_normalized(1e-11));

        const std::size_t count = qtest::index_in(rng, 1, 5);
        std::vector<StateVector> parts;
        std::size_t total = 0;
        for (std::size_t p = 0; p < count; ++p) {
            const std::size_t d = qtest::index_in(rng, 1, 16);
            parts.push_back(qtest::random_state(rng, d));
            total += d;
        }
        const StateVector sum = direct_sum(parts, 1.0 / std::sqrt(double(count)));
        REQUIRE(sum.dim() == total);
        CHECK(sum.is_normalized(1e-11));
        std::size_t offset = 0;
        for (const StateVector& part : parts) {
            for (std::size_t t = 0; t < part.dim(); ++t) {
                CHECK(std::abs(sum.amplitude(offset + t) -
                               part.amplitude(t) / std::sqrt(double(count))) < 1e-15);
            }
            offset += part.dim();
        }
    }
}

TEST_CASE("outcome probability for basis projectors") {
    const StateVector phi = real_state({0.6, 0.8});
    CHECK(outcome_probability(ProjectorOperator::basis_state(2, 0), phi) ==
          doctest::Approx(0.36).epsilon(1e-14));
    CHECK(outcome_probability(ProjectorOperator::identity(2), phi) ==
          doctest::Approx(1.0).epsilon(1e-14));

    std::vector<StateVector> plane{StateVector::basis_state(3, 0), StateVector::basis_state(3, 1)};
    const ProjectorOperator p = ProjectorOperator::span(std::move(plane));
    CHECK(outcome_probability(p, StateVector::basis_state(3, 2)) == 0.0);
}

TEST_CASE("outcome probability demands a normalized state") {
    CHECK_THROWS_AS(outcome_probability(ProjectorOperator::identity(2), real_state({0.5, 0.5})),
                    NormalizationError);
}

TEST_CASE("collapse renormalizes onto the outcome subspace") {
    SUBCASE("basis projector") {
        const auto outcome = collapse(ProjectorOperator::basis_state(2, 0), real_state({0.6, 0.8}));
        CHECK(outcome.probability == doctest::Approx(0.36).epsilon(1e-14));
        CHECK(outcome.post_state.amplitude(0).real() == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(std::abs(outcome.post_state.amplitude(1)) < 1e-14);
    }
    SUBCASE("identity leaves the state alone") {
        const StateVector phi = real_state({0.6, 0.8});
        const auto outcome = collapse(ProjectorOperator::identity(2), phi);
        CHECK(outcome.probability == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(std::abs(outcome.post_state.amplitude(0) - phi.amplitude(0)) < 1e-14);
        CHECK(std::abs(outcome.post_state.amplitude(1) - phi.amplitude(1)) < 1e-14);
    }
    SUBCASE("projection formula by hand in dim 3") {
        std::vector<StateVector> plane{StateVector::basis_state(3, 0),
                                       StateVector::basis_state(3, 1)};
        const auto outcome =
            collapse(ProjectorOperator::span(std::move(plane)), real_state({0.6, 0.0, 0.8}));
        CHECK(outcome.probability == doctest::Approx(0.36).epsilon(1e-14));
        CHECK(outcome.post_state.amplitude(0).real() == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(std::abs(outcome.post_state.amplitude(1)) < 1e-14);
        CHECK(std::abs(outcome.post_state.amplitude(2)) < 1e-14);
    }
    SUBCASE("zero-probability outcome") {
        CHECK_THROWS_AS(
            collapse(ProjectorOperator::basis_state(2, 1), StateVector::basis_state(2, 0)),
            ZeroProbabilityError);
    }
}

TEST_CASE("repeatability: re-measuring the post state is certain") {
    Rng rng(71003);
    for (int it = 0; it < 60; ++it) {
        const std::size_t dim = qtest::index_in(rng, 2, 32);
        const std::size_t rank = qtest::index_in(rng, 1, std::min<std::size_t>(dim, 6));
        const ProjectorOperator p =
            ProjectorOperator::span(qtest::random_orthonormal_states(rng, dim, rank));
        const StateVector phi = qtest::random_state(rng, dim);
        if (outcome_probability(p, phi) <= 1e-6) continue;

        const auto outcome = collapse(p, phi);
        CHECK(outcome.post_state.is_normalized(1e-12));
        CHECK(outcome_probability(p, outcome.post_state) == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("completeness: {P, 1-P} probabilities sum to one") {
    Rng rng(71004);
    for (int it = 0; it < 60; ++it) {
        const std::size_t dim = qtest::index_in(rng, 2, 32);
        const std::size_t rank = qtest::index_in(rng, 1, std::min<std::size_t>(dim, 6));
        const ProjectorOperator p =
            ProjectorOperator::span(qtest::random_orthonormal_states(rng, dim, rank));
        const StateVector phi = qtest::random_state(rng, dim);
        const double yes = outcome_probability(p, phi);
        const double no = outcome_probability(p.complement(), phi);
        CHECK(std::abs(yes + no - 1.0) <= 1e-12);
    }
}

TEST_CASE("dense and Gram forms agree") {
    Rng rng(71005);
    for (int it = 0; it < 40; ++it) {
        const std::size_t dim = qtest::index_in(rng, 2, 64);
        const std::size_t rank = qtest::index_in(rng, 1, std::min<std::size_t>(dim, 8));
        const ProjectorOperator gram =
            ProjectorOperator::span(qtest::random_orthonormal_states(rng, dim, rank));
        const ProjectorOperator dense = ProjectorOperator::from_dense(gram.dense());
        const StateVector phi = qtest::random_state(rng, dim);
        CHECK(outcome_probability(gram, phi) ==
              doctest::Approx(outcome_probability(dense, phi)).epsilon(1e-10));
    }
}

TEST_CASE("dense form satisfies the projector identities") {
    Rng rng(71006);
    const ProjectorOperator p =
        ProjectorOperator::span(qtest::random_orthonormal_states(rng, 24, 5));
    const ComplexMatrix mat = p.dense();

    const ComplexMatrix squared = qtest::matmul_oracle(mat, mat);
    CHECK(qtest::max_abs_diff(squared, mat) <= 1e-10);
    for (std::size_t i = 0; i < mat.rows(); ++i)
        for (std::size_t j = 0; j < mat.cols(); ++j)
            CHECK(std::abs(mat(i, j) - std::conj(mat(j, i))) <= 1e-10);
}

TEST_CASE("dense materialization is refused above the dimension limit") {
    const ProjectorOperator p = ProjectorOperator::basis_state(2, 0);
    CHECK_THROWS_AS(p.dense(1), DimensionError);
}

TEST_CASE("from_dense validates the projector identities") {
    ComplexMatrix not_idempotent(2, 2);
    not_idempotent(0, 0) = Complex{0.5, 0.0};
    not_idempotent(1, 1) = Complex{0.5, 0.0};
    CHECK_THROWS_AS(ProjectorOperator::from_dense(not_idempotent), NumericalError);

    ComplexMatrix not_hermitian(2, 2);
    not_hermitian(0, 0) = Complex{1.0, 0.0};
    not_hermitian(0, 1) = Complex{0.0, 0.5};
    CHECK_THROWS_AS(ProjectorOperator::from_dense(not_hermitian), NumericalError);
}

TEST_CASE("span rejects non-orthonormal sets") {
    std::vector<StateVector> skewed{real_state({0.6, 0.8}), real_state({0.8, 0.6})};
    CHECK_THROWS_AS(ProjectorOperator::span(std::move(skewed)), NormalizationError);
}
