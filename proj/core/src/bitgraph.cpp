#include "bitgraph.hpp"

#include <string>

#include "oddpack/errors.hpp"

namespace oddpack::detail {

Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  for (Vertex v : s) m |= bit(v);
  return m;
}

std::vector<int> to_vector(Mask m) {
  std::vector<int> out;
  for_each_bit(m, [&](int v) { out.push_back(v); });
  return out;
}

VertexSet to_set(Mask m) { return VertexSet(to_vector(m)); }

BitGraph::BitGraph(const Graph& g) : n(g.order()) {
  if (n > kMaxMaskVertices) {
    throw ResourceLimitError("exact search limited to " + std::to_string(kMaxMaskVertices) + " vertices, got " +
                             std::to_string(n));
  }
  adj.assign(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)] |= bit(e.v);
    adj[static_cast<std::size_t>(e.v)] |= bit(e.u);
  }
}

bool BitGraph::has_edge(Mask alive) const {
  bool found = false;
  for_each_bit(alive, [&](int v) { found = found || (adj[static_cast<std::size_t>(v)] & alive) != 0; });
  return found;
}

Graph BitGraph::to_graph(Mask alive) const {
  std::vector<Edge> edges;
  for_each_bit(alive, [&](int u) {
    for_each_bit(adj[static_cast<std::size_t>(u)] & alive & ~full_mask(u + 1), [&](int v) { edges.emplace_back(u, v); });
  });
  return Graph(n, edges);
}

bool bipartite(const BitGraph& g, Mask alive) {
  Mask unseen = alive;
  while (unseen != 0) {
    const int root = lowest(unseen);
    Mask side[2] = {bit(root), 0};
    Mask frontier = bit(root);
    unseen &= ~bit(root);
    int color = 0;
    while (frontier != 0) {
      Mask next = 0;
      for_each_bit(frontier, [&](int v) { next |= g.adj[static_cast<std::size_t>(v)]; });
      next &= alive;
      if ((next & side[color]) != 0) return false;
      frontier = next & unseen;
      unseen &= ~frontier;
      color ^= 1;
      side[color] |= frontier;
    }
  }
  return true;
}

std::vector<int> shortest_odd_cycle(const BitGraph& g, Mask alive) {
  int best_len = g.n + 2;
  std::vector<int> best;
  int parent[kMaxMaskVertices];
  for_each_bit(alive, [&](int root) {
    Mask seen = bit(root);
    Mask layer = bit(root);
    parent[root] = -1;
    for (int d = 0; layer != 0 && 2 * d + 1 < best_len; ++d) {
      // Same-layer edge closes an odd walk of length 2d+1.
      int hit_u = -1;
      int hit_v = -1;
      for_each_bit(layer, [&](int u) {
        if (hit_u >= 0) return;
        const Mask same = g.adj[static_cast<std::size_t>(u)] & layer;
        if (same != 0) {
          hit_u = u;
          hit_v = lowest(same);
        }
      });
      if (hit_u >= 0) {
        std::vector<int> left{hit_u};
        std::vector<int> right{hit_v};
        while (left.back() != right.back()) {
          left.push_back(parent[left.back()]);
          right.push_back(parent[right.back()]);
        }
        right.pop_back();
        std::vector<int> cycle(left.rbegin(), left.rend());
        cycle.insert(cycle.end(), right.begin(), right.end());
        best_len = static_cast<int>(cycle.size());
        best = std::move(cycle);
        break;
      }
      Mask next = 0;
      for_each_bit(layer, [&](int u) {
        const Mask fresh = g.adj[static_cast<std::size_t>(u)] & alive & ~seen & ~next;
        for_each_bit(fresh, [&](int w) { parent[w] = u; });
        next |= fresh;
      });
      seen |= next;
      layer = next;
    }
  });
  return best;
}

Edge first_edge(const BitGraph& g, Mask alive) {
  Edge e;
  e.u = e.v = -1;
  for_each_bit(alive, [&](int u) {
    if (e.u >= 0) return;
    const Mask up = g.adj[static_cast<std::size_t>(u)] & alive & ~full_mask(u + 1);
    if (up != 0) {
      e.u = u;
      e.v = lowest(up);
    }
  });
  return e;
}

}  // namespace oddpack::detail
