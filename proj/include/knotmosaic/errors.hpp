#pragma once

#include <stdexcept>
#include <string>

namespace knotmosaic {

// Malformed input: bad dimensions, unknown tile ids, mismatched matrices.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// An enumeration ran past its configured cell or node budget. Never used for
// an empty result.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace knotmosaic
