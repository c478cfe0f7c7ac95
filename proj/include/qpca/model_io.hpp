#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>

#include "qpca/classifier.hpp"

namespace qpca {

inline constexpr int kModelFormatVersion = 1;

/// Exact binary64 round trip through text: C99 hex-float notation.
std::string hex_double(double value);
double parse_hex_double(const std::string& text);

/// Writes the model as a versioned JSON envelope. All numeric payload is
/// hex-float encoded, so load(save(m)) is bit-exact.
void save_model(const ClassifierModel& model, std::ostream& out);
void save_model(const ClassifierModel& model, const std::filesystem::path& path);

/// Parses and re-validates a persisted model: version gate, structural
/// consistency (k = s + 2, row lengths), component orthonormality within
/// 1e-8. Throws VersionError / ModelIntegrityError / ParseError.
ClassifierModel load_model(std::istream& in);
ClassifierModel load_model(const std::filesystem::path& path);

/// Current UTC time as ISO-8601. Honors SOURCE_DATE_EPOCH when set, so
/// builds and tests can pin the training timestamp.
std::string iso8601_utc_now();

} // namespace qpca
