#pragma once

#include <vector>

#include "oddpack/budget.hpp"
#include "oddpack/graph.hpp"

namespace oddpack {

/// Vertex set whose removal leaves a bipartite graph.
struct OddCycleCover {
  VertexSet members;
  bool minimal = false;  // set when produced by the exact minimiser
};

/// Vertex set whose removal leaves no odd cycle through `terminals`.
struct OddSCycleCover {
  VertexSet members;
  VertexSet terminals;
};

/// Minimum odd cycle cover; among all minimum covers the lexicographically
/// least sorted sequence is returned. Throws ResourceLimitError on budget exhaustion.
OddCycleCover min_odd_cycle_cover(const Graph& g, const Budget& budget = {});

/// Minimum odd S-cycle cover with the same tie-break as min_odd_cycle_cover.
OddSCycleCover min_odd_s_cycle_cover(const Graph& g, const VertexSet& s, const Budget& budget = {});

/// Every minimum odd cycle cover, in lexicographic order.
std::vector<VertexSet> all_min_odd_cycle_covers(const Graph& g, const Budget& budget = {});

bool is_odd_cycle_cover(const Graph& g, const VertexSet& x);

/// True iff g - x has no odd cycle meeting s \ x.
bool verify_cover(const Graph& g, const VertexSet& s, const VertexSet& x);

}  // namespace oddpack
