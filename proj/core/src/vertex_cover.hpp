#pragma once

#include "bitgraph.hpp"
#include "oddpack/budget.hpp"

namespace oddpack::detail {

/// Size of a greedy maximal matching of G[alive]; a lower bound on tau.
int greedy_matching_size(const BitGraph& g, Mask alive);

/// Does G[alive] have a vertex cover of at most `budget` vertices?
bool vc_within(const BitGraph& g, Mask alive, int budget, BudgetMeter& meter);

/// Exact vertex cover number of G[alive].
int vc_number(const BitGraph& g, Mask alive, BudgetMeter& meter);

/// Lexicographically least minimum vertex cover of G[alive].
Mask lex_min_vertex_cover(const BitGraph& g, Mask alive, BudgetMeter& meter);

}  // namespace oddpack::detail
