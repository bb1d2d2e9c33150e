#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oddpack/budget.hpp"
#include "oddpack/graph.hpp"
#include "oddpack/partitions.hpp"
#include "oddpack/pbm.hpp"

namespace oddpack {

/// Vertex-disjoint odd cycles, each meeting the terminal set.
struct CyclePacking {
  std::vector<Cycle> cycles;

  std::size_t size() const noexcept { return cycles.size(); }
};

bool validate_packing(const Graph& g, const VertexSet& s, const CyclePacking& packing, std::string* why = nullptr);

/// k disjoint odd S-cycles, shortest candidates first; absent iff none exist.
std::optional<CyclePacking> pack_odd_s_cycles(const Graph& g, const VertexSet& s, int k, const Budget& budget = {});

/// Largest number of disjoint odd S-cycles.
int max_odd_s_cycle_packing(const Graph& g, const VertexSet& s, const Budget& budget = {});

/// g plus one twin s' per terminal (ids n, n+1, ...), N(s') = N(s), and the
/// system of pairs (s, s') with every parity demanded odd.
struct TwinReduction {
  Graph graph;
  TerminalSystem system;
  int original_order = 0;
};

TwinReduction twin_reduction(const Graph& g, const VertexSet& s);

/// Maps an odd s-s' path of the augmented graph back to an odd cycle through s.
Cycle cycle_from_twin_path(const TwinReduction& reduction, const std::vector<Vertex>& path);

struct DichotomyResult {
  std::optional<CyclePacking> packing;
  /// Odd S-cycle cover, or for the bipartite variant a cover making g bipartite.
  std::optional<VertexSet> cover;
  /// Minimum odd S-cycle cover, reported by the bipartite variant alongside `cover`.
  std::optional<VertexSet> s_cycle_cover;
  int bound = 0;
  bool bound_met = false;
  int connectivity = -1;
  int tau_k = -1;          // bipartite variant only
  int relaxed_bound = -1;  // 3k-3, bipartite variant only
  bool relaxed_met = false;
};

/// k disjoint odd S-cycles, or a minimum odd S-cycle cover checked against 2k-2.
DichotomyResult dichotomy_s_cycles(const Graph& g, const VertexSet& s, int k, const Budget& budget = {});

/// min over k-subsets S' of s of tau(G[S']).
int tau_k(const Graph& g, const VertexSet& s, int k, const Budget& budget = {});

/// k disjoint odd S-cycles, or a minimum odd cycle cover checked against
/// 2k-2+tau_k(G[S]) and against 3k-3. Requires |s| >= k.
DichotomyResult dichotomy_bipartite_cover(const Graph& g, const VertexSet& s, int k, const Budget& budget = {});

/// k rounds of: lowest remaining vertex u, lexicographically least edge vw in
/// its neighbourhood, delete the triangle. Absent when some round finds none.
std::optional<CyclePacking> greedy_triangle_packing(const Graph& g, int k);

struct MatchingFormResult {
  enum class Branch { independent_set, triangles, report };
  Branch branch = Branch::report;
  std::optional<CyclePacking> packing;
  std::optional<VertexSet> independent_set;
  std::optional<NicePartition> partition;
  bool within_has_matching = false;  // report branch: G_{A,B} has a matching of size k
};

const char* to_string(MatchingFormResult::Branch b);

/// Packing through an independent k-set, else greedy triangles, else a report
/// on the canonical nice partition's within-graph.
MatchingFormResult dichotomy_matching_form(const Graph& g, int k, const Budget& budget = {});

}  // namespace oddpack
