#pragma once

#include <stdexcept>
#include <string>

namespace hamtorus {

// Bad arguments: out-of-range sizes, invalid cells, length mismatches.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Arguments are well-formed but the operation is not defined for them.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The requested enumeration is too large for the chosen tier.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two routes that must agree did not. Never swallowed.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hamtorus
