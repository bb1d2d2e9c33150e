#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "oddpack/budget.hpp"
#include "oddpack/graph.hpp"
#include "oddpack/partitions.hpp"

namespace oddpack {

enum class Parity { even, odd };

inline const char* to_string(Parity p) { return p == Parity::odd ? "odd" : "even"; }

struct TerminalPair {
  Vertex s = 0;
  Vertex t = 0;

  friend bool operator==(const TerminalPair&, const TerminalPair&) = default;
};

/// k terminal pairs, the parity set I (0-based pair indices, sorted) and the
/// parity demanded for each index of I.
struct TerminalSystem {
  std::vector<TerminalPair> pairs;
  std::vector<int> parity_set;
  std::vector<Parity> demanded;  // parallel to parity_set

  int k() const noexcept { return static_cast<int>(pairs.size()); }
  VertexSet terminals() const;
  std::optional<Parity> demand(int index) const;

  /// System with every pair's parity demanded.
  static TerminalSystem all_demanded(std::vector<TerminalPair> pairs, Parity parity);
  /// System with no parity demands.
  static TerminalSystem plain(std::vector<TerminalPair> pairs);
};

/// Throws InputError unless all 2k terminals are distinct vertices of g and the
/// parity set is a sorted duplicate-free subset of pair indices with demands.
void validate_terminal_system(const Graph& g, const TerminalSystem& ts);

/// Every indexed edge lies in the within-graph of p and misses every other
/// pair's terminals. Labels must be exactly the parity set.
bool is_parity_breaking(const Matching& m, const Graph& g, const Partition& p, const TerminalSystem& ts);

/// Matching {m_i} in h with m_i disjoint from pairs[j] for every j != i, labels 0..k-1.
bool is_avoiding_matching(const Matching& m, const Graph& h, const std::vector<TerminalPair>& pairs);

/// Keeps only the edges whose labels lie in `labels`.
Matching restrict_labels(const Matching& m, const std::vector<int>& labels);

struct PbmTrace {
  std::vector<std::string> steps;
  int dead_branch_activations = 0;
  std::vector<std::string> dead_branch_log;
};

/// Inductive extraction for pairs with tau(h) >= 4k-3. Labels name the caller's
/// pair indices. Throws PreconditionError when the bound fails.
Matching extract_pbm_4k(const Graph& h, const std::vector<TerminalPair>& pairs, const Budget& budget = {},
                        PbmTrace* trace = nullptr);

/// Case analysis for independent terminals with tau(h) >= 2k-1. If the
/// tau-critical branch is ever reached the exhaustive search finishes the job
/// and the event is counted in `trace`.
Matching extract_pbm_independent(const Graph& h, const std::vector<TerminalPair>& pairs, const Budget& budget = {},
                                 PbmTrace* trace = nullptr);

/// Exhaustive search for an avoiding matching indexed by all pairs of h.
std::optional<Matching> brute_force_avoiding_matching(const Graph& h, const std::vector<TerminalPair>& pairs,
                                                      const Budget& budget = {});

/// Exhaustive search for a parity breaking matching indexed by ts.parity_set.
std::optional<Matching> brute_force_pbm(const Graph& g, const Partition& p, const TerminalSystem& ts,
                                        const Budget& budget = {});

struct EquivalenceReport {
  bool uniform = true;
  std::size_t partitions = 0;
  std::size_t with_pbm = 0;
};

/// PBM existence over every nice partition of g.
EquivalenceReport nice_partition_equivalence(const Graph& g, const TerminalSystem& ts, const Budget& budget = {});

inline bool nice_partition_equivalence_check(const Graph& g, const TerminalSystem& ts, const Budget& budget = {}) {
  return nice_partition_equivalence(g, ts, budget).uniform;
}

}  // namespace oddpack
