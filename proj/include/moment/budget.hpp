#pragma once

#include <stdexcept>

namespace moment {

/// Thrown when an enumeration would exceed its work budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace moment
