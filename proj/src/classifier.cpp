#include "qpca/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "qpca/errors.hpp"

namespace qpca {

ClassifierModel::ClassifierModel(PrincipalComponents components, std::size_t pixel_count,
                                 ModelMetadata metadata)
    : components_(std::move(components)),
      pixel_count_(pixel_count),
      block_dim_(components_.count() + 2),
      metadata_(std::move(metadata)) {
    const std::size_t s = components_.count();
    if (s == 0) throw ModelIntegrityError("model needs at least one component");
    if (pixel_count_ == 0) throw DimensionError("model needs at least one pixel");
    for (const auto& comp : components_.components) {
        if (comp.size() != pixel_count_) {
            throw DimensionError("component length does not match pixel count");
        }
    }
    if (components_.singular_values.size() != s) {
        throw ModelIntegrityError("singular value count does not match component count");
    }

    encoded_.reserve(s);
    for (std::size_t l = 1; l <= s; ++l) {
        encoded_.push_back(encode_component(components_.components[l - 1], l, block_dim_));
    }

    // Orthonormality of the encoded set is what makes the measurement a
    // projector; reject models that cannot provide it.
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = i; j < s; ++j) {
            const double g = representation_inner_product(encoded_[i], encoded_[j]);
            const double expected = (i == j) ? 1.0 : 0.0;
            if (std::abs(g - expected) > kOperatorTolerance) {
                throw ModelIntegrityError("encoded components are not orthonormal");
            }
        }
    }
}

ProjectorOperator build_projector(const ClassifierModel& model) {
    std::vector<StateVector> basis;
    basis.reserve(model.component_count());
    for (const EncodedComponent& c : model.encoded_components()) {
        basis.push_back(c.state());
    }
    try {
        return ProjectorOperator::span(std::move(basis));
    } catch (const NormalizationError& e) {
        throw ModelIntegrityError(e.what());
    }
}

double classical_likelihood(const ClassifierModel& model, std::span<const double> x) {
    if (x.size() != model.pixel_count()) {
        throw DimensionError("feature vector length " + std::to_string(x.size()) +
                             " does not match model pixel count " +
                             std::to_string(model.pixel_count()));
    }
    double m = 0.0;
    for (const auto& comp : model.components().components) {
        double dot = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) dot += comp[i] * x[i];
        m += dot * dot;
    }
    return m;
}

double yes_probability(const ClassifierModel& model, std::span<const double> x) {
    if (x.size() != model.pixel_count()) {
        throw DimensionError("feature vector length " + std::to_string(x.size()) +
                             " does not match model pixel count " +
                             std::to_string(model.pixel_count()));
    }
    const EncodedImage image = encode_image(x, model.block_dim());
    double p = 0.0;
    for (const EncodedComponent& c : model.encoded_components()) {
        const double overlap = representation_inner_product(c, image);
        p += overlap * overlap;
    }
    return std::clamp(p, 0.0, 1.0);
}

double overall_no_probability(double per_trial_yes, std::uint64_t trials) {
    double base = 1.0 - per_trial_yes;
    double result = 1.0;
    for (std::uint64_t e = trials; e != 0; e >>= 1) {
        if (e & 1) result *= base;
        base *= base;
    }
    return result;
}

RandomEngine trial_engine(std::uint64_t seed, std::uint64_t trial_index) {
    // splitmix64 finalizer over the pair; decorrelates nearby seeds and
    // trial indices before feeding the engine.
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial_index + 1);
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return RandomEngine(z);
}

double draw_unit(RandomEngine& engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

TrialOutcome run_trial(const ClassifierModel& model, std::span<const double> x,
                       RandomEngine& engine) {
    const double p = yes_probability(model, x);
    return draw_unit(engine) < p ? TrialOutcome::yes : TrialOutcome::no;
}

ClassificationResult classify(const ClassifierModel& model, std::span<const double> x,
                              std::uint64_t seed,
                              std::optional<std::uint64_t> trials_override) {
    const double p = yes_probability(model, x);
    const std::uint64_t n = model.pixel_count();
    const std::uint64_t trials = trials_override.value_or(n * n);

    ClassificationResult result;
    result.trials_total = trials;
    result.per_trial_probability = p;
    result.analytic_overall_no = overall_no_probability(p, trials);
    result.seed = seed;

    double norm2 = 0.0;
    for (double xi : x) norm2 += xi * xi;
    result.input_norm = std::sqrt(norm2);

    for (std::uint64_t t = 0; t < trials; ++t) {
        RandomEngine engine = trial_engine(seed, t);
        if (draw_unit(engine) < p) {
            result.decision_yes = true;
            result.positive_trial_index = t;
            result.trials_run = t + 1;
            return result;
        }
    }
    result.decision_yes = false;
    result.trials_run = trials;
    return result;
}

} // namespace qpca
