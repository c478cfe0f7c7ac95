#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "qpca/encoding.hpp"
#include "qpca/pca.hpp"
#include "qpca/projector.hpp"

namespace qpca {

/// Training provenance carried alongside a model.
struct ModelMetadata {
    std::size_t sample_count = 0;
    std::optional<std::size_t> requested_components; // explicit s, when given
    std::optional<double> variance_threshold;        // tau, when s was chosen by variance
    bool centered = false;
    std::string created; // ISO-8601 UTC
};

/// Trained classifier: s principal components over n pixels together with
/// their direct-sum encodings in (C^k)^{oplus n}, k = s + 2. Immutable and
/// shareable across threads once constructed.
class ClassifierModel {
public:
    ClassifierModel(PrincipalComponents components, std::size_t pixel_count,
                    ModelMetadata metadata = {});

    std::size_t pixel_count() const { return pixel_count_; }       // n
    std::size_t component_count() const { return components_.count(); } // s
    std::size_t block_dim() const { return block_dim_; }           // k = s + 2
    std::size_t state_dim() const { return pixel_count_ * block_dim_; }

    const PrincipalComponents& components() const { return components_; }
    const std::vector<EncodedComponent>& encoded_components() const { return encoded_; }
    const ModelMetadata& metadata() const { return metadata_; }

private:
    PrincipalComponents components_;
    std::size_t pixel_count_;
    std::size_t block_dim_;
    std::vector<EncodedComponent> encoded_;
    ModelMetadata metadata_;
};

/// Measurement operator over the encoded-component subspace, in implicit
/// Gram form. Throws ModelIntegrityError if the encoded components are not
/// orthonormal within kOperatorTolerance.
ProjectorOperator build_projector(const ClassifierModel& model);

/// M = sum_l (sum_i v_{l,i} x_i)^2, the squared projection mass of x onto
/// the component subspace.
double classical_likelihood(const ClassifierModel& model, std::span<const double> x);

/// Per-trial yes probability <Phi(X)|Pi|Phi(X)>, computed through the
/// Gram form as sum_l |<Phi(V_l)|Phi(X)>|^2. Equals M / n^2.
double yes_probability(const ClassifierModel& model, std::span<const double> x);

/// (1 - p)^trials by binary exponentiation (exact for dyadic p).
double overall_no_probability(double per_trial_yes, std::uint64_t trials);

using RandomEngine = std::mt19937_64;

/// Engine for one trial, derived from (seed, trial_index) so outcomes do
/// not depend on scheduling.
RandomEngine trial_engine(std::uint64_t seed, std::uint64_t trial_index);

/// Uniform double in [0, 1) from the engine's raw 64-bit output; avoids
/// std::uniform_real_distribution, which is not pinned down by the standard.
double draw_unit(RandomEngine& engine);

enum class TrialOutcome { yes, no };

/// One projective measurement of Phi(X) against {Pi, 1 - Pi}, simulated as
/// a Bernoulli draw against the analytic yes probability.
TrialOutcome run_trial(const ClassifierModel& model, std::span<const double> x,
                       RandomEngine& engine);

struct ClassificationResult {
    bool decision_yes = false;
    std::uint64_t trials_total = 0; // the n^2 budget (or override)
    std::uint64_t trials_run = 0;   // <= total; early exit on first yes
    std::optional<std::uint64_t> positive_trial_index;
    double per_trial_probability = 0.0;
    double analytic_overall_no = 0.0; // (1 - P)^trials_total
    std::uint64_t seed = 0;
    double input_norm = 0.0; // l2 norm of the raw feature vector
};

/// Runs up to n^2 independent trials (yes on the first positive one).
/// Deterministic for fixed (model, x, seed).
ClassificationResult classify(const ClassifierModel& model, std::span<const double> x,
                              std::uint64_t seed,
                              std::optional<std::uint64_t> trials_override = {});

} // namespace qpca
