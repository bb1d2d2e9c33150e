#pragma once

#include <vector>

#include "oddpack/graph.hpp"

namespace fixture {

using oddpack::Edge;
using oddpack::Graph;

inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  }
  return Graph(n, e);
}

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

inline Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int u = 0; u < a; ++u) {
    for (int v = a; v < a + b; ++v) e.emplace_back(u, v);
  }
  return Graph(a + b, e);
}

// Disjoint copies of K_size.
inline Graph cliques(int count, int size) {
  std::vector<Edge> e;
  for (int c = 0; c < count; ++c) {
    for (int u = 0; u < size; ++u) {
      for (int v = u + 1; v < size; ++v) e.emplace_back(c * size + u, c * size + v);
    }
  }
  return Graph(count * size, e);
}

inline oddpack::VertexSet all(const Graph& g) {
  std::vector<int> v(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) v[static_cast<std::size_t>(i)] = i;
  return oddpack::VertexSet(v);
}

inline oddpack::VertexSet from_mask(std::uint64_t m) {
  std::vector<int> out;
  for (int v = 0; v < 64; ++v) {
    if ((m >> v) & 1U) out.push_back(v);
  }
  return oddpack::VertexSet(out);
}

}  // namespace fixture
