#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fsjump {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value that cannot be built as a code (zero denominator, empty word, ...).
class InvalidCode : public Error {
public:
    using Error::Error;
};

/// Two binary-sequence codes whose equality could not be decided within the
/// configured search bound.
class IncomparableCodes : public Error {
public:
    using Error::Error;
};

/// A pair (x, y) failed one of the three clauses defining P.
class ClauseViolation : public Error {
public:
    ClauseViolation(int clause, std::vector<std::uint64_t> witness, const std::string& what)
        : Error(what), clause_(clause), witness_(std::move(witness)) {}

    int clause() const noexcept { return clause_; }
    /// clause 1: {m}; clause 2: {k}; clause 3: {k, l1, l2}.
    const std::vector<std::uint64_t>& witness() const noexcept { return witness_; }

private:
    int clause_;
    std::vector<std::uint64_t> witness_;
};

/// A code combination outside the supported algebra for a P-point.
class StructuralMismatch : public Error {
public:
    using Error::Error;
};

/// A relation or reduction applied to a point outside its domain.
class DomainViolation : public Error {
public:
    using Error::Error;
};

/// The fiber map found no index k' with x(k') = x0(k).
class NoWitness : public Error {
public:
    using Error::Error;
};

/// Composition of reductions whose relations do not line up.
class TypeMismatch : public Error {
public:
    using Error::Error;
};

/// An enumeration would exceed its configured cap.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& message)
        : Error("parse error at offset " + std::to_string(position) + ": " + message),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace fsjump
