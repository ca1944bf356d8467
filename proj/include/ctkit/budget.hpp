#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>

namespace ctkit {

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded() : std::runtime_error("time budget exceeded") {}
};

/// Cooperative per-thread time budget. Long-running loops call
/// check_budget(); it throws BudgetExceeded once the deadline installed by a
/// BudgetScope on the current thread has passed.
class BudgetScope {
 public:
  explicit BudgetScope(std::optional<std::chrono::milliseconds> budget);
  ~BudgetScope();
  BudgetScope(const BudgetScope&) = delete;
  BudgetScope& operator=(const BudgetScope&) = delete;

 private:
  std::optional<std::chrono::steady_clock::time_point> previous_;
};

void check_budget();

}  // namespace ctkit
