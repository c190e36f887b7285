#pragma once

#include <stdexcept>
#include <string>

namespace mbp {

/// Caller supplied arguments that violate an operation's preconditions.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed input text (Pauli strings, check-matrix files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input that describes an invalid object, e.g. anticommuting
/// stabilizer rows.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mbp
