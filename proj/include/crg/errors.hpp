#pragma once

#include <stdexcept>
#include <string>

namespace crg {

/// Thrown when two operands live in different groups.
class IncompatibleGroups : public std::invalid_argument {
 public:
  explicit IncompatibleGroups(const std::string& what) : std::invalid_argument(what) {}
};

/// A search or enumeration ran out of its node/state budget. Never a verdict.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Weight arithmetic in a generic cover left the int64 range.
class WeightOverflow : public std::overflow_error {
 public:
  explicit WeightOverflow(const std::string& what) : std::overflow_error(what) {}
};

/// An invariant that the mathematics guarantees was violated.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace crg
