#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "oddpack/graph.hpp"

namespace oddpack {

/// Largest order handled by the canonical enumerator.
inline constexpr int kMaxEnumerationOrder = 12;

/// Canonical adjacency code: two graphs of the same order get the same code
/// iff they are isomorphic. Upper-triangle bits in canonical vertex order.
struct CanonicalCode {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
};

/// Throws InputError above kMaxEnumerationOrder vertices.
CanonicalCode canonical_code(const Graph& g);

/// Graph on n vertices described by a code.
Graph graph_from_code(int n, const CanonicalCode& code);

/// The canonical relabelling of g.
inline Graph canonical_form(const Graph& g) { return graph_from_code(g.order(), canonical_code(g)); }

enum class GraphClass { all, bipartite };

/// Codes of one representative per isomorphism class on exactly n vertices,
/// sorted. Built by adding a vertex to every class on n-1 vertices; the
/// bipartite class only extends bipartite graphs.
std::vector<CanonicalCode> enumerate_codes(int n, GraphClass cls = GraphClass::all);

/// Streams graph_from_code over enumerate_codes(n, cls).
void for_each_graph(int n, const std::function<void(const Graph&)>& visit, GraphClass cls = GraphClass::all);

std::vector<Graph> enumerate_graphs(int n, GraphClass cls = GraphClass::all);

bool is_connected(const Graph& g);

}  // namespace oddpack
