#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qpca {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands have incompatible dimensions.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A state that must be unit-norm is not.
class NormalizationError : public Error {
public:
    using Error::Error;
};

/// Collapse was requested onto an outcome of probability zero.
class ZeroProbabilityError : public Error {
public:
    using Error::Error;
};

/// A value lies outside its admissible interval.
class RangeError : public Error {
public:
    using Error::Error;
};

/// A training sample is unusable (e.g. the zero vector).
class DegenerateSampleError : public Error {
public:
    using Error::Error;
};

/// Non-finite input or a numerical routine failed to converge.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// Requested more components than the numerical rank provides.
class RankError : public Error {
public:
    using Error::Error;
};

/// A classifier model violates its structural invariants.
class ModelIntegrityError : public Error {
public:
    using Error::Error;
};

/// Malformed input; carries the byte offset where parsing failed.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t byte_offset)
        : Error(message + " (byte offset " + std::to_string(byte_offset) + ")"),
          offset_(byte_offset) {}
    explicit ParseError(const std::string& message) : Error(message), offset_(0) {}

    std::size_t byte_offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Input is syntactically recognizable but of an unsupported format.
class FormatError : public Error {
public:
    using Error::Error;
};

/// Persisted file declares a format version this build does not read.
class VersionError : public Error {
public:
    using Error::Error;
};

/// Command line or batch invocation is unusable as given.
class UsageError : public Error {
public:
    using Error::Error;
};

} // namespace qpca
