#pragma once

#include <string>
#include <vector>

#include "oddpack/budget.hpp"
#include "oddpack/covers.hpp"
#include "oddpack/graph.hpp"

namespace oddpack {

struct Partition {
  VertexSet part_a;
  VertexSet part_b;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;
};

bool is_partition_of(const Graph& g, const Partition& p);

/// A partition together with the minimum odd cycle cover that induces it.
struct NicePartition {
  Partition partition;
  OddCycleCover inducing_cover;
};

struct NiceOptions {
  /// Skip re-solving to confirm that the supplied cover is minimum.
  bool trusted_minimum = false;
  Budget budget{};
};

/// Canonical bipartition of g - x, then each cover vertex joins the side
/// opposite the majority of its neighbours outside x; ties go to part A.
/// Throws PreconditionError when x is not a (minimum) odd cycle cover.
NicePartition nice_partition(const Graph& g, const OddCycleCover& x, const NiceOptions& options = {});

/// nice_partition for the lexicographically least minimum cover.
NicePartition canonical_nice_partition(const Graph& g, const Budget& budget = {});

/// Every partition induced by the minimum cover x: all side choices per
/// component of g - x and both placements of every tied cover vertex.
/// Deduplicated up to swapping the two parts.
std::vector<NicePartition> nice_partitions_induced_by(const Graph& g, const OddCycleCover& x);

/// Union of nice_partitions_induced_by over every minimum odd cycle cover.
std::vector<NicePartition> all_nice_partitions(const Graph& g, const Budget& budget = {});

/// Checks the nice-partition invariants: the cover is minimum, the parts split
/// g - x bipartitely, and every cover vertex has at least as many neighbours
/// across as on its own side. On failure `why` (if given) names the violation.
bool validate_nice_partition(const Graph& g, const NicePartition& np, const Budget& budget = {},
                             std::string* why = nullptr);

/// G[A] ∪ G[B] on the same vertex ids.
Graph within_graph(const Graph& g, const Partition& p);

bool is_vertex_cover(const Graph& g, const VertexSet& c);

/// Vertex cover number. Throws ResourceLimitError on budget exhaustion.
int tau(const Graph& g, const Budget& budget = {});

/// Lexicographically least minimum vertex cover.
VertexSet min_vertex_cover(const Graph& g, const Budget& budget = {});

/// Maximum matching of a bipartite graph. Throws PreconditionError otherwise.
Matching konig_matching(const Graph& g);

/// Does g contain a matching with `size` edges? Exhaustive; at most 64 vertices.
bool has_matching_of_size(const Graph& g, int size, const Budget& budget = {});

struct MatchingCoverBound {
  Matching matching;
  VertexSet covered;
};

/// Greedy maximal matching (edges in lexicographic order) and the vertices it covers.
MatchingCoverBound maximal_matching_cover_bound(const Graph& g);

/// True iff deleting any single edge or vertex lowers tau.
bool is_tau_critical(const Graph& g, const Budget& budget = {});

}  // namespace oddpack
