#pragma once

#include <stdexcept>
#include <string>

namespace linrel {

/// Operands live over different prime fields or ambient spaces.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An enumeration or search would exceed its size guard.
class GuardExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

/// A relation document could not be parsed or validated.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A mathematical invariant that must always hold was violated.
/// Seeing one of these means the library has a bug.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace linrel
