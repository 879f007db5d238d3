#pragma once

#include <stdexcept>
#include <string>

namespace multimod {

// Malformed arguments: dimension mismatches, bad subsets, unparsable files.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation would produce a function whose effective domain is empty.
class EmptyDomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Continuous minimization along a coordinate with a nonpositive pivot.
class UnboundedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace multimod
