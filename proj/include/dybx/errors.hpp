#pragma once

#include <stdexcept>
#include <string>

namespace dybx {

/// Malformed input: bad file, bad flag, inconsistent sizes. Maps to CLI exit 2.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A mathematical precondition does not hold for the given data
/// (non-invertible element, zero Jacobian at the base point, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Something that is a theorem failed. Indicates a bug or corrupted input. Exit 3.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace dybx
