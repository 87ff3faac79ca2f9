#pragma once

#include <stdexcept>
#include <string>

namespace sympstairs {

/// A precondition on a numeric argument was violated (negative radicand,
/// a < 1, division by zero, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Arithmetic between two quadratic irrationals living in different fields.
class IncompatibleFieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A result that is guaranteed by the mathematics did not materialize.
/// Seeing this means a bug in the library.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sympstairs
