#include "oddpack/graph.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <queue>
#include <string>

#include "flow.hpp"
#include "oddpack/errors.hpp"

namespace oddpack {

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

VertexSet VertexSet::unite(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet VertexSet::minus(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_difference(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet VertexSet::intersect(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_intersection(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(int n) {
  if (n < 0) throw InputError("negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n) {
      throw InputError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} out of range for n=" +
                       std::to_string(n));
    }
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw InputError("parallel edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
  }
  for (const Edge& e : edges_) {
    adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  if (!has_vertex(a) || !has_vertex(b)) return false;
  const auto& row = adjacency_[static_cast<std::size_t>(a)];
  return std::binary_search(row.begin(), row.end(), b);
}

Graph Graph::without_edge(const Edge& e) const {
  std::vector<Edge> rest;
  rest.reserve(edges_.size());
  for (const Edge& f : edges_) {
    if (f != e) rest.push_back(f);
  }
  return Graph(order(), rest);
}

Graph Graph::with_edges(std::span<const Edge> extra) const {
  std::vector<Edge> all = edges_;
  all.insert(all.end(), extra.begin(), extra.end());
  return Graph(order(), all);
}

// ---------------------------------------------------------------------------
// Subgraphs

std::vector<Vertex> Subgraph::parent_path(const std::vector<Vertex>& local) const {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(parent(v));
  return out;
}

VertexSet Subgraph::parent_set(const VertexSet& local) const {
  std::vector<Vertex> out;
  for (Vertex v : local) out.push_back(parent(v));
  return VertexSet(std::move(out));
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<Vertex> local(static_cast<std::size_t>(g.order()), -1);
  Subgraph sub;
  for (Vertex v : keep) {
    if (!g.has_vertex(v)) throw InputError("vertex " + std::to_string(v) + " out of range");
    local[static_cast<std::size_t>(v)] = static_cast<Vertex>(sub.to_parent.size());
    sub.to_parent.push_back(v);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const Vertex a = local[static_cast<std::size_t>(e.u)];
    const Vertex b = local[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) edges.emplace_back(a, b);
  }
  sub.graph = Graph(static_cast<int>(sub.to_parent.size()), edges);
  return sub;
}

Subgraph remove_vertices(const Graph& g, const VertexSet& drop) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!drop.contains(v)) keep.push_back(v);
  }
  return induced_subgraph(g, VertexSet(std::move(keep)));
}

VertexSet to_local(const Subgraph& sub, const VertexSet& parent_set) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
    if (parent_set.contains(sub.to_parent[i])) out.push_back(static_cast<Vertex>(i));
  }
  return VertexSet(std::move(out));
}

// ---------------------------------------------------------------------------
// Bipartiteness

std::optional<Bipartition> is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> first;
  std::vector<Vertex> second;
  std::queue<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    if (color[static_cast<std::size_t>(root)] != -1) continue;
    color[static_cast<std::size_t>(root)] = 0;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop();
      for (Vertex w : g.neighbors(v)) {
        auto& cw = color[static_cast<std::size_t>(w)];
        if (cw == -1) {
          cw = 1 - color[static_cast<std::size_t>(v)];
          queue.push(w);
        } else if (cw == color[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) (color[static_cast<std::size_t>(v)] == 0 ? first : second).push_back(v);
  return Bipartition{VertexSet(std::move(first)), VertexSet(std::move(second))};
}

// ---------------------------------------------------------------------------
// Connectivity

namespace {

constexpr int kInfiniteCapacity = std::numeric_limits<int>::max() / 4;

// Vertex-split network: v_in = 2v, v_out = 2v+1.
detail::FlowNetwork split_network(const Graph& g, Vertex source, Vertex sink) {
  const int n = g.order();
  detail::FlowNetwork net(2 * n);
  for (Vertex v = 0; v < n; ++v) {
    const int cap = (v == source || v == sink) ? kInfiniteCapacity : 1;
    net.add_arc(2 * v, 2 * v + 1, cap);
  }
  for (const Edge& e : g.edges()) {
    net.add_arc(2 * e.u + 1, 2 * e.v, kInfiniteCapacity);
    net.add_arc(2 * e.v + 1, 2 * e.u, kInfiniteCapacity);
  }
  return net;
}

bool is_complete(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  return g.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

int local_connectivity(const Graph& g, Vertex s, Vertex t, int limit) {
  auto net = split_network(g, s, t);
  return net.max_flow(2 * s + 1, 2 * t, limit);
}

struct ConnectivityResult {
  int value = 0;
  Vertex source = -1;
  Vertex sink = -1;
};

ConnectivityResult connectivity_with_pair(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return {0, -1, -1};
  if (is_complete(g)) return {n - 1, -1, -1};
  int best = n - 1;
  for (Vertex v = 0; v < n; ++v) best = std::min(best, g.degree(v));
  ConnectivityResult result{best, -1, -1};
  // Even's scheme: some vertex among the first kappa+1 lies outside a minimum cut.
  for (Vertex i = 0; i <= result.value && i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j)) continue;
      // Capped one above the incumbent so a recorded pair always carries its exact value.
      const int flow = local_connectivity(g, i, j, result.value + 1);
      if (flow < result.value || (flow == result.value && result.source < 0)) result = {flow, i, j};
    }
  }
  return result;
}

}  // namespace

int vertex_connectivity(const Graph& g) { return connectivity_with_pair(g).value; }

VertexSet min_vertex_separator(const Graph& g) {
  const auto best = connectivity_with_pair(g);
  if (best.source < 0 || best.value == 0) return {};
  auto net = split_network(g, best.source, best.sink);
  net.max_flow(2 * best.source + 1, 2 * best.sink, kInfiniteCapacity);
  const auto reach = net.residual_reachable(2 * best.source + 1);
  std::vector<Vertex> cut;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (reach[static_cast<std::size_t>(2 * v)] && !reach[static_cast<std::size_t>(2 * v + 1)]) cut.push_back(v);
  }
  return VertexSet(std::move(cut));
}

std::vector<std::vector<Vertex>> fan_paths(const Graph& g, Vertex source, const VertexSet& targets, int count) {
  const int n = g.order();
  const int sink = 2 * n;
  detail::FlowNetwork net(2 * n + 1);
  for (Vertex v = 0; v < n; ++v) {
    if (targets.contains(v)) {
      net.add_arc(2 * v, sink, 1);
    } else if (v != source) {
      net.add_arc(2 * v, 2 * v + 1, 1);
    }
  }
  for (const Edge& e : g.edges()) {
    net.add_arc(2 * e.u + 1, 2 * e.v, 1);
    net.add_arc(2 * e.v + 1, 2 * e.u, 1);
  }
  net.max_flow(2 * source + 1, sink, count);
  std::vector<std::vector<Vertex>> paths;
  for (const auto& nodes : net.decompose(2 * source + 1, sink)) {
    std::vector<Vertex> path{source};
    for (int node : nodes) {
      if (node == sink) break;
      const Vertex v = node / 2;
      if (v != path.back()) path.push_back(v);
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

// ---------------------------------------------------------------------------
// Blocks

Subgraph Block::as_subgraph(const Graph& parent) const {
  Subgraph sub;
  sub.to_parent = vertices;
  std::vector<Edge> local;
  local.reserve(edges.size());
  auto index_of = [&](Vertex v) {
    return static_cast<Vertex>(std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin());
  };
  for (const Edge& e : edges) local.emplace_back(index_of(e.u), index_of(e.v));
  sub.graph = Graph(static_cast<int>(vertices.size()), local);
  (void)parent;
  return sub;
}

std::vector<Block> blocks(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<Block> out;
  std::vector<Edge> edge_stack;
  int timer = 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };

  auto emit_block = [&](const Edge& until) {
    Block block;
    std::vector<Vertex> verts;
    while (!edge_stack.empty()) {
      const Edge e = edge_stack.back();
      edge_stack.pop_back();
      block.edges.push_back(e);
      verts.push_back(e.u);
      verts.push_back(e.v);
      if (e == until) break;
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::sort(block.edges.begin(), block.edges.end());
    block.vertices = std::move(verts);
    out.push_back(std::move(block));
  };

  for (Vertex root = 0; root < n; ++root) {
    if (disc[static_cast<std::size_t>(root)] != -1) continue;
    if (g.degree(root) == 0) {
      disc[static_cast<std::size_t>(root)] = timer++;
      out.push_back(Block{{root}, {}});
      continue;
    }
    std::vector<Frame> stack{{root, -1, 0}};
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        const Vertex w = nbrs[f.next++];
        const auto wi = static_cast<std::size_t>(w);
        const auto vi = static_cast<std::size_t>(f.v);
        if (disc[wi] == -1) {
          edge_stack.emplace_back(f.v, w);
          disc[wi] = low[wi] = timer++;
          stack.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[wi] < disc[vi]) {
          edge_stack.emplace_back(f.v, w);
          low[vi] = std::min(low[vi], disc[wi]);
        }
      } else {
        const Vertex w = f.v;
        const Vertex parent = f.parent;
        stack.pop_back();
        if (parent >= 0) {
          const auto pi = static_cast<std::size_t>(parent);
          const auto wi = static_cast<std::size_t>(w);
          low[pi] = std::min(low[pi], low[wi]);
          if (low[wi] >= disc[pi]) emit_block(Edge(parent, w));
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cycles

bool Cycle::meets(const VertexSet& s) const {
  return std::any_of(vertices.begin(), vertices.end(), [&](Vertex v) { return s.contains(v); });
}

bool is_cycle_of(const Graph& g, const Cycle& c) {
  const auto len = c.vertices.size();
  if (len < 3) return false;
  std::vector<Vertex> sorted = c.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < len; ++i) {
    if (!g.adjacent(c.vertices[i], c.vertices[(i + 1) % len])) return false;
  }
  return true;
}

namespace {

struct BfsTree {
  std::vector<int> depth;
  std::vector<Vertex> parent;
};

BfsTree bfs_tree(const Graph& g, Vertex root, std::vector<int>* component_mark = nullptr, int mark = 0) {
  const auto n = static_cast<std::size_t>(g.order());
  BfsTree t{std::vector<int>(n, -1), std::vector<Vertex>(n, -1)};
  std::queue<Vertex> queue;
  t.depth[static_cast<std::size_t>(root)] = 0;
  queue.push(root);
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop();
    if (component_mark != nullptr) (*component_mark)[static_cast<std::size_t>(v)] = mark;
    for (Vertex w : g.neighbors(v)) {
      if (t.depth[static_cast<std::size_t>(w)] == -1) {
        t.depth[static_cast<std::size_t>(w)] = t.depth[static_cast<std::size_t>(v)] + 1;
        t.parent[static_cast<std::size_t>(w)] = v;
        queue.push(w);
      }
    }
  }
  return t;
}

// Closes the odd cycle formed by tree paths to u and v plus the edge uv.
Cycle cycle_through_lca(const BfsTree& t, Vertex u, Vertex v) {
  std::vector<Vertex> left{u};
  std::vector<Vertex> right{v};
  while (left.back() != right.back()) {
    const int dl = t.depth[static_cast<std::size_t>(left.back())];
    const int dr = t.depth[static_cast<std::size_t>(right.back())];
    if (dl >= dr) left.push_back(t.parent[static_cast<std::size_t>(left.back())]);
    if (dr >= dl) right.push_back(t.parent[static_cast<std::size_t>(right.back())]);
  }
  // left ends at the common ancestor; right too.
  right.pop_back();
  Cycle c;
  c.vertices.assign(left.rbegin(), left.rend());
  c.vertices.insert(c.vertices.end(), right.begin(), right.end());
  return c;
}

}  // namespace

std::optional<Cycle> find_odd_cycle(const Graph& g) {
  std::vector<int> mark(static_cast<std::size_t>(g.order()), -1);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (mark[static_cast<std::size_t>(root)] != -1) continue;
    const BfsTree t = bfs_tree(g, root, &mark, root);
    for (const Edge& e : g.edges()) {
      if (mark[static_cast<std::size_t>(e.u)] != root) continue;
      if (t.depth[static_cast<std::size_t>(e.u)] == t.depth[static_cast<std::size_t>(e.v)]) {
        return cycle_through_lca(t, e.u, e.v);
      }
    }
  }
  return std::nullopt;
}

std::optional<Cycle> shortest_odd_cycle(const Graph& g) {
  std::optional<Cycle> best;
  for (Vertex root = 0; root < g.order(); ++root) {
    const BfsTree t = bfs_tree(g, root);
    for (const Edge& e : g.edges()) {
      const int du = t.depth[static_cast<std::size_t>(e.u)];
      if (du < 0 || du != t.depth[static_cast<std::size_t>(e.v)]) continue;
      const auto len = static_cast<std::size_t>(2 * du + 1);
      if (!best || len < best->length()) best = cycle_through_lca(t, e.u, e.v);
    }
  }
  return best;
}

namespace {

// Odd cycle through `s` inside a 2-connected non-bipartite graph.
Cycle odd_cycle_through(const Graph& block, Vertex s) {
  Cycle base = *find_odd_cycle(block);
  const auto& cv = base.vertices;
  if (std::find(cv.begin(), cv.end(), s) != cv.end()) {
    auto it = std::find(cv.begin(), cv.end(), s);
    std::rotate(base.vertices.begin(), base.vertices.begin() + (it - cv.begin()), base.vertices.end());
    return base;
  }
  const auto fans = fan_paths(block, s, VertexSet(cv), 2);
  assert(fans.size() == 2);
  const auto& p1 = fans[0];
  const auto& p2 = fans[1];
  const auto len = cv.size();
  const auto i = static_cast<std::size_t>(std::find(cv.begin(), cv.end(), p1.back()) - cv.begin());
  const auto j = static_cast<std::size_t>(std::find(cv.begin(), cv.end(), p2.back()) - cv.begin());
  const std::size_t forward = (j + len - i) % len;
  const std::size_t legs = (p1.size() - 1) + (p2.size() - 1);
  const bool go_forward = (legs + forward) % 2 == 1;
  Cycle c;
  c.vertices = p1;
  std::size_t pos = i;
  while (pos != j) {
    pos = go_forward ? (pos + 1) % len : (pos + len - 1) % len;
    c.vertices.push_back(cv[pos]);
  }
  for (std::size_t k = p2.size() - 1; k-- > 1;) c.vertices.push_back(p2[k]);
  return c;
}

}  // namespace

std::optional<Cycle> find_odd_s_cycle(const Graph& g, const VertexSet& s) {
  if (s.empty()) return std::nullopt;
  const auto all_blocks = blocks(g);
  for (Vertex target : s) {
    if (!g.has_vertex(target)) continue;
    for (const Block& b : all_blocks) {
      if (b.vertices.size() < 3) continue;
      if (!std::binary_search(b.vertices.begin(), b.vertices.end(), target)) continue;
      const Subgraph sub = b.as_subgraph(g);
      if (is_bipartite(sub.graph)) continue;
      const auto local = static_cast<Vertex>(std::lower_bound(b.vertices.begin(), b.vertices.end(), target) -
                                             b.vertices.begin());
      Cycle c = odd_cycle_through(sub.graph, local);
      c.vertices = sub.parent_path(c.vertices);
      assert(c.odd() && is_cycle_of(g, c));
      return c;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Matchings

std::optional<Edge> Matching::edge_for(int label) const {
  for (std::size_t i = 0; i < labels.size() && i < edges.size(); ++i) {
    if (labels[i] == label) return edges[i];
  }
  return std::nullopt;
}

bool is_matching_of(const Graph& g, const Matching& m) {
  std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
  for (const Edge& e : m.edges) {
    if (!g.adjacent(e.u, e.v)) return false;
    if (used[static_cast<std::size_t>(e.u)] || used[static_cast<std::size_t>(e.v)]) return false;
    used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = true;
  }
  return m.labels.empty() || m.labels.size() == m.edges.size();
}

}  // namespace oddpack
