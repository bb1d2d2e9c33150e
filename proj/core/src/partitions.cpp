#include "oddpack/partitions.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "bitgraph.hpp"
#include "oddpack/errors.hpp"
#include "vertex_cover.hpp"

namespace oddpack {

namespace {

using detail::Mask;

// Sides of each component of g - x, in parent ids; `first` holds the component's lowest id.
std::vector<Bipartition> component_sides(const Graph& g, const VertexSet& x) {
  const Subgraph rest = remove_vertices(g, x);
  const auto bip = is_bipartite(rest.graph);
  if (!bip) throw PreconditionError("supplied set is not an odd cycle cover");
  const int n = rest.graph.order();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<Bipartition> out;
  for (int root = 0; root < n; ++root) {
    if (comp[static_cast<std::size_t>(root)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<Vertex> first;
    std::vector<Vertex> second;
    std::vector<int> stack{root};
    comp[static_cast<std::size_t>(root)] = id;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      (bip->first.contains(v) ? first : second).push_back(rest.parent(v));
      for (int w : rest.graph.neighbors(v)) {
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
      }
    }
    out.push_back({VertexSet(std::move(first)), VertexSet(std::move(second))});
  }
  return out;
}

int count_in(const Graph& g, Vertex v, const std::vector<char>& side, char which) {
  int c = 0;
  for (Vertex w : g.neighbors(v)) c += side[static_cast<std::size_t>(w)] == which ? 1 : 0;
  return c;
}

// Side labels: 'a', 'b', or 0 for cover vertices.
std::vector<char> base_sides(const Graph& g, const std::vector<Bipartition>& comps, std::uint64_t flips) {
  std::vector<char> side(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const bool flip = i < 64 && ((flips >> i) & 1U) != 0;
    for (Vertex v : comps[i].first) side[static_cast<std::size_t>(v)] = flip ? 'b' : 'a';
    for (Vertex v : comps[i].second) side[static_cast<std::size_t>(v)] = flip ? 'a' : 'b';
  }
  return side;
}

Partition from_sides(const std::vector<char>& side) {
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  for (std::size_t v = 0; v < side.size(); ++v) (side[v] == 'a' ? a : b).push_back(static_cast<Vertex>(v));
  return {VertexSet(std::move(a)), VertexSet(std::move(b))};
}

void require_cover(const Graph& g, const OddCycleCover& x, const NiceOptions& options) {
  for (Vertex v : x.members) {
    if (!g.has_vertex(v)) throw PreconditionError("cover vertex out of range");
  }
  if (!is_odd_cycle_cover(g, x.members)) throw PreconditionError("supplied set is not an odd cycle cover");
  if (options.trusted_minimum) return;
  const auto best = min_odd_cycle_cover(g, options.budget);
  if (best.members.size() != x.members.size()) {
    throw PreconditionError("supplied odd cycle cover is not minimum");
  }
}

bool independent(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    for (Vertex w : g.neighbors(v)) {
      if (w > v && s.contains(w)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_partition_of(const Graph& g, const Partition& p) {
  if (!p.part_a.intersect(p.part_b).empty()) return false;
  if (static_cast<int>(p.part_a.size() + p.part_b.size()) != g.order()) return false;
  for (Vertex v : p.part_a.unite(p.part_b)) {
    if (!g.has_vertex(v)) return false;
  }
  return true;
}

NicePartition nice_partition(const Graph& g, const OddCycleCover& x, const NiceOptions& options) {
  require_cover(g, x, options);
  std::vector<char> side = base_sides(g, component_sides(g, x.members), 0);
  const std::vector<char> outside = side;
  for (Vertex v : x.members) {
    const int in_a = count_in(g, v, outside, 'a');
    const int in_b = count_in(g, v, outside, 'b');
    side[static_cast<std::size_t>(v)] = in_a > in_b ? 'b' : 'a';
  }
  return {from_sides(side), {x.members, true}};
}

NicePartition canonical_nice_partition(const Graph& g, const Budget& budget) {
  return nice_partition(g, min_odd_cycle_cover(g, budget), {true, budget});
}

std::vector<NicePartition> nice_partitions_induced_by(const Graph& g, const OddCycleCover& x) {
  const auto comps = component_sides(g, x.members);
  if (comps.size() > 20) throw ResourceLimitError("too many components to enumerate side choices");
  std::set<Partition> seen;
  std::vector<NicePartition> out;
  // Flipping every component swaps A and B, so the last component stays fixed.
  const std::uint64_t flip_count = comps.empty() ? 1 : std::uint64_t{1} << (comps.size() - 1);
  for (std::uint64_t flips = 0; flips < flip_count; ++flips) {
    const std::vector<char> outside = base_sides(g, comps, flips);
    std::vector<char> side = outside;
    std::vector<Vertex> tied;
    for (Vertex v : x.members) {
      const int in_a = count_in(g, v, outside, 'a');
      const int in_b = count_in(g, v, outside, 'b');
      side[static_cast<std::size_t>(v)] = in_a > in_b ? 'b' : 'a';
      if (in_a == in_b) tied.push_back(v);
    }
    if (tied.size() > 20) throw ResourceLimitError("too many tied cover vertices to enumerate");
    for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << tied.size()); ++choice) {
      for (std::size_t i = 0; i < tied.size(); ++i) {
        side[static_cast<std::size_t>(tied[i])] = ((choice >> i) & 1U) != 0 ? 'b' : 'a';
      }
      Partition p = from_sides(side);
      Partition swapped{p.part_b, p.part_a};
      if (seen.contains(p) || seen.contains(swapped)) continue;
      seen.insert(p);
      out.push_back({std::move(p), {x.members, true}});
    }
  }
  return out;
}

std::vector<NicePartition> all_nice_partitions(const Graph& g, const Budget& budget) {
  std::vector<NicePartition> out;
  for (const VertexSet& x : all_min_odd_cycle_covers(g, budget)) {
    auto part = nice_partitions_induced_by(g, {x, true});
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

bool validate_nice_partition(const Graph& g, const NicePartition& np, const Budget& budget, std::string* why) {
  auto fail = [&](const char* reason) {
    if (why != nullptr) *why = reason;
    return false;
  };
  const Partition& p = np.partition;
  const VertexSet& x = np.inducing_cover.members;
  if (!is_partition_of(g, p)) return fail("parts do not partition the vertex set");
  for (Vertex v : x) {
    if (!g.has_vertex(v)) return fail("cover vertex out of range");
  }
  if (!is_odd_cycle_cover(g, x)) return fail("inducing set is not an odd cycle cover");
  if (min_odd_cycle_cover(g, budget).members.size() != x.size()) return fail("inducing cover is not minimum");
  if (!independent(g, p.part_a.minus(x)) || !independent(g, p.part_b.minus(x))) {
    return fail("parts do not bipartition g - X");
  }
  std::vector<char> outside(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : p.part_a.minus(x)) outside[static_cast<std::size_t>(v)] = 'a';
  for (Vertex v : p.part_b.minus(x)) outside[static_cast<std::size_t>(v)] = 'b';
  for (Vertex v : x) {
    const int in_a = count_in(g, v, outside, 'a');
    const int in_b = count_in(g, v, outside, 'b');
    if (p.part_a.contains(v) ? in_a > in_b : in_b > in_a) return fail("cover vertex sits on its majority side");
  }
  if (why != nullptr) why->clear();
  return true;
}

Graph within_graph(const Graph& g, const Partition& p) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (p.part_a.contains(e.u) == p.part_a.contains(e.v)) edges.push_back(e);
  }
  return Graph(g.order(), edges);
}

bool is_vertex_cover(const Graph& g, const VertexSet& c) {
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return c.contains(e.u) || c.contains(e.v); });
}

int tau(const Graph& g, const Budget& budget) {
  if (g.size() == 0) return 0;
  const detail::BitGraph bg(g);
  BudgetMeter meter(budget, "tau");
  return detail::vc_number(bg, bg.all(), meter);
}

VertexSet min_vertex_cover(const Graph& g, const Budget& budget) {
  if (g.size() == 0) return {};
  const detail::BitGraph bg(g);
  BudgetMeter meter(budget, "min_vertex_cover");
  return detail::to_set(detail::lex_min_vertex_cover(bg, bg.all(), meter));
}

Matching konig_matching(const Graph& g) {
  const auto bip = is_bipartite(g);
  if (!bip) throw PreconditionError("konig_matching needs a bipartite graph");
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> mate(n, -1);
  std::vector<char> visited(n, 0);
  // Kuhn's augmenting path search from every vertex of the first side.
  auto augment = [&](auto&& self, int u) -> bool {
    for (int w : g.neighbors(u)) {
      if (visited[static_cast<std::size_t>(w)] != 0) continue;
      visited[static_cast<std::size_t>(w)] = 1;
      const int m = mate[static_cast<std::size_t>(w)];
      if (m < 0 || self(self, m)) {
        mate[static_cast<std::size_t>(w)] = u;
        mate[static_cast<std::size_t>(u)] = w;
        return true;
      }
    }
    return false;
  };
  for (Vertex u : bip->first) {
    std::fill(visited.begin(), visited.end(), 0);
    augment(augment, u);
  }
  Matching out;
  for (Vertex u : bip->first) {
    if (mate[static_cast<std::size_t>(u)] >= 0) out.edges.emplace_back(u, mate[static_cast<std::size_t>(u)]);
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

bool has_matching_of_size(const Graph& g, int size, const Budget& budget) {
  if (size <= 0) return true;
  const detail::BitGraph bg(g);
  BudgetMeter meter(budget, "has_matching_of_size");
  auto search = [&](auto&& self, Mask alive, int need) -> bool {
    meter.tick();
    if (need == 0) return true;
    Mask useful = 0;
    detail::for_each_bit(alive, [&](int v) {
      if (bg.neighbors(v, alive) != 0) useful |= detail::bit(v);
    });
    if (detail::popcount(useful) < 2 * need) return false;
    const int v = detail::lowest(useful);
    bool found = false;
    detail::for_each_bit(bg.neighbors(v, useful), [&](int w) {
      found = found || self(self, useful & ~(detail::bit(v) | detail::bit(w)), need - 1);
    });
    return found || self(self, useful & ~detail::bit(v), need);
  };
  return search(search, bg.all(), size);
}

MatchingCoverBound maximal_matching_cover_bound(const Graph& g) {
  MatchingCoverBound out;
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> covered;
  for (const Edge& e : g.edges()) {
    if (used[static_cast<std::size_t>(e.u)] != 0 || used[static_cast<std::size_t>(e.v)] != 0) continue;
    used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = 1;
    out.matching.edges.push_back(e);
    covered.push_back(e.u);
    covered.push_back(e.v);
  }
  out.covered = VertexSet(std::move(covered));
  return out;
}

bool is_tau_critical(const Graph& g, const Budget& budget) {
  if (g.order() == 0) return true;
  detail::BitGraph bg(g);
  BudgetMeter meter(budget, "is_tau_critical");
  const int t = detail::vc_number(bg, bg.all(), meter);
  for (int v = 0; v < bg.n; ++v) {
    if (t == 0 || detail::vc_within(bg, bg.all() & ~detail::bit(v), t - 1, meter) == false) return false;
  }
  for (const Edge& e : g.edges()) {
    bg.remove_edge(e.u, e.v);
    const bool drops = detail::vc_within(bg, bg.all(), t - 1, meter);
    bg.adj[static_cast<std::size_t>(e.u)] |= detail::bit(e.v);
    bg.adj[static_cast<std::size_t>(e.v)] |= detail::bit(e.u);
    if (!drops) return false;
  }
  return true;
}

}  // namespace oddpack
