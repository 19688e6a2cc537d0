#pragma once

#include <stdexcept>
#include <string>

namespace linecover {

// Raised when an operation would exceed an explicit size budget
// (vertex/edge caps on the exact solvers, family-size caps, ...).
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a constructive routine cannot produce a verified object.
class ConstructionFailure : public std::runtime_error {
 public:
  explicit ConstructionFailure(const std::string& what) : std::runtime_error(what) {}
};

// Raised on malformed input documents (JSON shape, canonical-form violations).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace linecover
