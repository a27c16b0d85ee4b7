#pragma once

#include <stdexcept>
#include <string>

namespace discbound {

/// Malformed input data: length mismatches, negative counts, bad clusterings.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A parameter lies outside the domain where an operation is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A constraint set admits no probability vector.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace discbound
