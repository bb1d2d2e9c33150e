#pragma once

#include <vector>

namespace oddpack::detail {

/// Small integral max-flow network (shortest augmenting paths).
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : arcs_(static_cast<std::size_t>(nodes)) {}

  void add_arc(int from, int to, int capacity);

  /// Augments until no path remains or `limit` units are routed.
  int max_flow(int source, int sink, int limit);

  /// Nodes reachable from `source` in the residual network.
  std::vector<bool> residual_reachable(int source) const;

  /// Splits the current flow into unit source-sink node sequences (source excluded).
  std::vector<std::vector<int>> decompose(int source, int sink);

 private:
  struct Arc {
    int to;
    int capacity;
    int original;
    std::size_t reverse;
  };
  std::vector<std::vector<Arc>> arcs_;
};

}  // namespace oddpack::detail
