#pragma once

#include <chrono>
#include <cstdint>
#include <string>

namespace oddpack {

/// Limits for the exponential searches. Zero means "no limit" for either field.
struct Budget {
  std::uint64_t max_nodes = 200'000'000;
  double max_seconds = 0.0;

  static Budget unlimited() { return Budget{0, 0.0}; }
};

/// Per-call counter. Every exact search owns one; nothing is shared between calls.
class BudgetMeter {
 public:
  BudgetMeter(const Budget& budget, std::string what);

  /// Counts one search node; throws ResourceLimitError once a limit is crossed.
  void tick();

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  Budget budget_;
  std::string what_;
  std::uint64_t nodes_ = 0;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace oddpack
