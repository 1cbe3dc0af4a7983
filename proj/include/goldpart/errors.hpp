#pragma once

#include <stdexcept>

namespace goldpart {

/// A computation refused because its size exceeds the configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace goldpart
