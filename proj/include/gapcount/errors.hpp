#pragma once

#include <stdexcept>
#include <string>

namespace gapcount {

/// An argument violates the documented precondition of an operation.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation was refused because it would exceed a configured budget
/// (table entries, enumerated assignments, enumerated selections).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (formula files, instance documents, integers).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gapcount
