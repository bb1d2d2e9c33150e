#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "oddpack/graph.hpp"

namespace oddpack::detail {

using Mask = std::uint64_t;

inline constexpr int kMaxMaskVertices = 64;

inline Mask bit(int v) { return Mask{1} << v; }
inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return std::countr_zero(m); }
inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

template <class F>
void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    const int v = std::countr_zero(m);
    m &= m - 1;
    f(v);
  }
}

Mask to_mask(const VertexSet& s);
VertexSet to_set(Mask m);
std::vector<int> to_vector(Mask m);

/// Adjacency bitmasks for graphs with at most 64 vertices.
struct BitGraph {
  int n = 0;
  std::vector<Mask> adj;

  BitGraph() = default;
  /// Throws ResourceLimitError when g has more than 64 vertices.
  explicit BitGraph(const Graph& g);

  Mask all() const { return full_mask(n); }
  void remove_edge(int u, int v) {
    adj[static_cast<std::size_t>(u)] &= ~bit(v);
    adj[static_cast<std::size_t>(v)] &= ~bit(u);
  }
  Mask neighbors(int v, Mask alive) const { return adj[static_cast<std::size_t>(v)] & alive; }
  bool has_edge(Mask alive) const;
  Graph to_graph(Mask alive) const;
};

bool bipartite(const BitGraph& g, Mask alive);

/// Shortest odd cycle of G[alive] as a vertex sequence; empty when bipartite.
std::vector<int> shortest_odd_cycle(const BitGraph& g, Mask alive);

/// Lexicographically least edge (u < v) of G[alive], or {-1,-1}.
Edge first_edge(const BitGraph& g, Mask alive);

}  // namespace oddpack::detail
