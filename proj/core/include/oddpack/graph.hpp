#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace oddpack {

using Vertex = int;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool touches(Vertex x) const noexcept { return u == x || v == x; }
  Vertex other(Vertex x) const noexcept { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  bool contains(Vertex v) const;
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const std::vector<Vertex>& members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  VertexSet unite(const VertexSet& other) const;
  VertexSet minus(const VertexSet& other) const;
  VertexSet intersect(const VertexSet& other) const;

  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Finite simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws InputError on loops, parallel edges, or ids outside 0..n-1.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges);

  int order() const noexcept { return static_cast<int>(adjacency_.size()); }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(Vertex a, Vertex b) const;
  bool has_vertex(Vertex v) const noexcept { return v >= 0 && v < order(); }

  Graph without_edge(const Edge& e) const;
  Graph with_edges(std::span<const Edge> extra) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.order() == b.order(); }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
};

/// A subgraph together with the id translation back to its parent graph.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;

  Vertex parent(Vertex local) const { return to_parent.at(static_cast<std::size_t>(local)); }
  std::vector<Vertex> parent_path(const std::vector<Vertex>& local) const;
  VertexSet parent_set(const VertexSet& local) const;
};

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep);
Subgraph remove_vertices(const Graph& g, const VertexSet& drop);

/// Maps a parent-graph vertex set to local ids of `sub`, dropping vertices not present.
VertexSet to_local(const Subgraph& sub, const VertexSet& parent_set);

struct Bipartition {
  VertexSet first;
  VertexSet second;
};

/// Proper 2-colouring if one exists. In every component the side holding the
/// component's lowest id is reported in `first`.
std::optional<Bipartition> is_bipartite(const Graph& g);

/// Exact vertex connectivity: n-1 for complete graphs, otherwise the smallest
/// vertex cut between a non-adjacent pair.
int vertex_connectivity(const Graph& g);

/// A minimum vertex cut (empty for complete or disconnected graphs).
VertexSet min_vertex_separator(const Graph& g);

/// Vertex-disjoint paths from `source` to distinct vertices of `targets`; each
/// path stops at the first target it reaches. Returns at most `count` paths.
std::vector<std::vector<Vertex>> fan_paths(const Graph& g, Vertex source, const VertexSet& targets, int count);

/// One block of the block decomposition: a maximal 2-connected piece, a bridge,
/// or an isolated vertex. Ids refer to the parent graph.
struct Block {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  Subgraph as_subgraph(const Graph& parent) const;
};

std::vector<Block> blocks(const Graph& g);

/// Cyclic sequence of distinct vertices.
struct Cycle {
  std::vector<Vertex> vertices;

  std::size_t length() const noexcept { return vertices.size(); }
  bool odd() const noexcept { return vertices.size() % 2 == 1; }
  bool meets(const VertexSet& s) const;
};

/// True when `c` has length >= 3, distinct vertices and consecutive adjacencies in `g`.
bool is_cycle_of(const Graph& g, const Cycle& c);

std::optional<Cycle> find_odd_cycle(const Graph& g);
std::optional<Cycle> shortest_odd_cycle(const Graph& g);

/// Odd cycle through some vertex of `s`, found through the block decomposition.
std::optional<Cycle> find_odd_s_cycle(const Graph& g, const VertexSet& s);

/// Set of vertex-disjoint edges; `labels`, when present, runs parallel to
/// `edges` and names the terminal pair each edge is assigned to.
struct Matching {
  std::vector<Edge> edges;
  std::vector<int> labels;

  std::size_t size() const noexcept { return edges.size(); }
  bool indexed() const noexcept { return !labels.empty() || edges.empty(); }
  std::optional<Edge> edge_for(int label) const;
};

bool is_matching_of(const Graph& g, const Matching& m);

}  // namespace oddpack
