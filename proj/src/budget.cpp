#include "ctkit/budget.hpp"

namespace ctkit {

namespace {
thread_local std::optional<std::chrono::steady_clock::time_point> t_deadline;
}

BudgetScope::BudgetScope(std::optional<std::chrono::milliseconds> budget) : previous_(t_deadline) {
  if (budget) t_deadline = std::chrono::steady_clock::now() + *budget;
}

BudgetScope::~BudgetScope() { t_deadline = previous_; }

void check_budget() {
  if (t_deadline && std::chrono::steady_clock::now() > *t_deadline) throw BudgetExceeded();
}

}  // namespace ctkit
