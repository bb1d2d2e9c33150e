#pragma once

#include <vector>

#include "bitgraph.hpp"
#include "oddpack/budget.hpp"

namespace oddpack::detail {

/// Branch-and-bound over odd cycles: any cover must delete a vertex of every
/// odd cycle, so the search branches on the vertices of one cycle, forbidding
/// earlier siblings in later branches. Vertex-disjoint odd cycles found
/// greedily give the lower bound. In S-mode only odd cycles meeting S count.
class OddCycleSearch {
 public:
  static constexpr int kInfeasible = 1 << 20;

  OddCycleSearch(const BitGraph& g, BudgetMeter& meter) : g_(g), meter_(meter) {}
  OddCycleSearch(const BitGraph& g, BudgetMeter& meter, Mask s) : g_(g), meter_(meter), s_(s), s_mode_(true) {}

  /// Odd (S-)cycle of G[alive], empty if none.
  std::vector<int> cycle(Mask alive) const;

  int lower_bound(Mask alive, Mask forbidden, int cap) const;

  /// Is there a cover of G[alive] of size <= budget avoiding `forbidden`?
  bool feasible(Mask alive, Mask forbidden, int budget, std::vector<int>* chosen);

  /// Collects every cover of size exactly `budget` (budget must be the minimum).
  void enumerate(Mask alive, Mask forbidden, int budget, Mask chosen, std::vector<Mask>& out);

  int minimum(Mask alive);
  Mask lex_min_cover(Mask alive);

 private:
  const BitGraph& g_;
  BudgetMeter& meter_;
  Mask s_ = 0;
  bool s_mode_ = false;
};

}  // namespace oddpack::detail
