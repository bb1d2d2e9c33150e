#include "oddpack/budget.hpp"

#include "oddpack/errors.hpp"

namespace oddpack {

BudgetMeter::BudgetMeter(const Budget& budget, std::string what)
    : budget_(budget), what_(std::move(what)), start_(std::chrono::steady_clock::now()) {}

void BudgetMeter::tick() {
  ++nodes_;
  if (budget_.max_nodes != 0 && nodes_ > budget_.max_nodes) {
    throw ResourceLimitError(what_ + ": node budget of " + std::to_string(budget_.max_nodes) +
                             " exhausted");
  }
  // The clock is only sampled every 4096 nodes.
  if (budget_.max_seconds > 0.0 && (nodes_ & 0xFFFu) == 0) {
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
    if (elapsed.count() > budget_.max_seconds) {
      throw ResourceLimitError(what_ + ": time budget of " + std::to_string(budget_.max_seconds) +
                               "s exhausted");
    }
  }
}

}  // namespace oddpack
