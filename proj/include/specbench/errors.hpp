#pragma once

#include <stdexcept>
#include <string>

namespace specbench {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed text input (MGF, manifest, SMILES, CSV). `location` is a
/// 1-based line number for line-oriented formats and a 0-based character
/// offset for SMILES.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t location)
        : Error(msg), location_(location) {}
    [[nodiscard]] std::size_t location() const noexcept { return location_; }

private:
    std::size_t location_ = 0;
};

/// A value violates its format contract (e.g. a malformed InChIKey).
class FormatError : public Error {
public:
    using Error::Error;
};

/// Referential-integrity violation inside a ReferenceLibrary.
class IntegrityError : public Error {
public:
    using Error::Error;
};

/// Two records claim the same key with contradictory content.
class ConflictError : public Error {
public:
    using Error::Error;
};

/// Embedding file could not be loaded (bad magic, truncation, duplicate
/// ids, non-finite values, dimension mismatch).
class LoadError : public Error {
public:
    using Error::Error;
};

/// Spectrum unusable for scoring (no positive-intensity peak).
class DegenerateSpectrumError : public Error {
public:
    using Error::Error;
};

/// Vector dimensions disagree or a zero-norm vector was passed where a
/// direction is required.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Input exceeds a configured size limit.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Evaluation protocol precondition violated (class sizes, seeds, splits).
class ProtocolError : public Error {
public:
    using Error::Error;
};

/// Generic argument/configuration precondition failure.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// File could not be opened or written.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace specbench
