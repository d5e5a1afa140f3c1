#pragma once

#include <stdexcept>
#include <string>

namespace severi {

// Exceeding a configured ceiling (word letter budgets, CLI --max-delta /
// --max-d).  The CLI maps this to exit code 3.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// A result violated an identity that holds by theorem (degree bounds,
// integrality of Severi degrees, cross-formula agreement).  Always a bug.
class InternalInvariantError : public std::logic_error {
 public:
  explicit InternalInvariantError(const std::string& what) : std::logic_error(what) {}
};

// An operation was invoked on a graph mode that does not define it
// (the strict statistics exist only for long-edge graphs).
class UnsupportedOperationError : public std::logic_error {
 public:
  explicit UnsupportedOperationError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace severi
