#include "oddpack/packing.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "bitgraph.hpp"
#include "oddpack/covers.hpp"
#include "oddpack/errors.hpp"
#include "path_masks.hpp"

namespace oddpack {

using detail::bit;
using detail::BitGraph;
using detail::Mask;

namespace {

bool by_size(Mask a, Mask b) {
  const int pa = detail::popcount(a);
  const int pb = detail::popcount(b);
  return pa != pb ? pa < pb : a < b;
}

std::vector<Mask> minimal_pairwise(std::vector<Mask> masks) {
  std::sort(masks.begin(), masks.end(), by_size);
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<Mask> out;
  for (Mask m : masks) {
    if (std::none_of(out.begin(), out.end(), [&](Mask k) { return (k & m) == k; })) out.push_back(m);
  }
  return out;
}

// Inclusion-minimal vertex sets of odd cycles meeting `s`, smallest first.
std::vector<Mask> odd_s_cycle_masks(const BitGraph& g, Mask s, BudgetMeter& meter) {
  if (s == 0) return {};
  if (g.n <= detail::kMaxPathDomain) {
    const detail::Domain whole(g.all());
    std::vector<detail::Local> family;
    for (int start = 0; start < g.n; ++start) {
      const Mask above = g.all() & ~detail::full_mask(start);
      const detail::Domain domain(above);
      const detail::Local back = domain.compress(g.adj[static_cast<std::size_t>(start)]);
      detail::for_each_path_mask(g, domain, start, meter, [&](detail::Local mask, detail::Local ends) {
        if (std::popcount(mask) < 3 || std::popcount(mask) % 2 == 0 || (ends & back) == 0) return;
        const Mask global = domain.expand(mask);
        if ((global & s) != 0) family.push_back(whole.compress(global));
      });
    }
    std::vector<Mask> out;
    for (detail::Local m : detail::minimal_masks(whole, family)) out.push_back(whole.expand(m));
    return out;
  }
  // Larger graphs: enumerate cycles by their lowest vertex.
  std::unordered_set<Mask> found;
  std::vector<int> path;
  for (int start = 0; start < g.n; ++start) {
    const Mask above = g.all() & ~detail::full_mask(start + 1);
    auto walk = [&](auto&& self, int at, Mask visited) -> void {
      meter.tick();
      const int len = detail::popcount(visited);
      if (len >= 3 && len % 2 == 1 && (g.adj[static_cast<std::size_t>(at)] & bit(start)) != 0 && (visited & s) != 0) {
        found.insert(visited);
      }
      detail::for_each_bit(g.neighbors(at, above & ~visited), [&](int w) { self(self, w, visited | bit(w)); });
    };
    walk(walk, start, bit(start));
  }
  return minimal_pairwise(std::vector<Mask>(found.begin(), found.end()));
}

}  // namespace

bool validate_packing(const Graph& g, const VertexSet& s, const CyclePacking& packing, std::string* why) {
  auto fail = [&](const char* reason) {
    if (why != nullptr) *why = reason;
    return false;
  };
  std::set<Vertex> used;
  for (const Cycle& c : packing.cycles) {
    if (!is_cycle_of(g, c)) return fail("not a cycle of the graph");
    if (!c.odd()) return fail("even cycle");
    if (!c.meets(s)) return fail("cycle misses the terminal set");
    for (Vertex v : c.vertices) {
      if (!used.insert(v).second) return fail("cycles overlap");
    }
  }
  if (why != nullptr) why->clear();
  return true;
}

std::optional<CyclePacking> pack_odd_s_cycles(const Graph& g, const VertexSet& s, int k, const Budget& budget) {
  if (k < 0) throw InputError("k must be non-negative");
  if (k == 0) return CyclePacking{};
  if (k == 1) {
    auto c = find_odd_s_cycle(g, s);
    if (!c) return std::nullopt;
    return CyclePacking{{std::move(*c)}};
  }
  const BitGraph bg(g);
  BudgetMeter meter(budget, "pack_odd_s_cycles");
  const std::vector<Mask> masks = odd_s_cycle_masks(bg, detail::to_mask(s), meter);
  const std::vector<int> pick = detail::disjoint_members(masks, k, meter);
  if (pick.empty()) return std::nullopt;
  CyclePacking out;
  for (int i : pick) out.cycles.push_back({detail::cycle_through(bg, masks[static_cast<std::size_t>(i)])});
  return out;
}

int max_odd_s_cycle_packing(const Graph& g, const VertexSet& s, const Budget& budget) {
  if (!find_odd_s_cycle(g, s)) return 0;
  const BitGraph bg(g);
  BudgetMeter meter(budget, "max_odd_s_cycle_packing");
  const std::vector<Mask> masks = odd_s_cycle_masks(bg, detail::to_mask(s), meter);
  int best = 1;
  while (!detail::disjoint_members(masks, best + 1, meter).empty()) ++best;
  return best;
}

TwinReduction twin_reduction(const Graph& g, const VertexSet& s) {
  const int n = g.order();
  std::vector<Edge> extra;
  std::vector<TerminalPair> pairs;
  int twin = n;
  for (Vertex v : s) {
    if (!g.has_vertex(v)) throw InputError("terminal outside the graph");
    for (Vertex w : g.neighbors(v)) extra.emplace_back(twin, w);
    pairs.push_back({v, twin});
    ++twin;
  }
  Graph grown(twin, g.edges());
  return {grown.with_edges(extra), TerminalSystem::all_demanded(std::move(pairs), Parity::odd), n};
}

Cycle cycle_from_twin_path(const TwinReduction& reduction, const std::vector<Vertex>& path) {
  if (path.size() < 4 || path.size() % 2 != 0) throw InputError("not an odd path of length at least 3");
  Cycle c{std::vector<Vertex>(path.begin(), path.end() - 1)};
  for (Vertex v : c.vertices) {
    if (v >= reduction.original_order) throw InputError("path runs through another twin vertex");
  }
  return c;
}

DichotomyResult dichotomy_s_cycles(const Graph& g, const VertexSet& s, int k, const Budget& budget) {
  if (k < 1) throw InputError("k must be positive");
  DichotomyResult r;
  r.bound = 2 * k - 2;
  r.connectivity = vertex_connectivity(g);
  r.packing = pack_odd_s_cycles(g, s, k, budget);
  if (r.packing) {
    r.bound_met = true;
    return r;
  }
  r.cover = min_odd_s_cycle_cover(g, s, budget).members;
  r.bound_met = static_cast<int>(r.cover->size()) <= r.bound;
  return r;
}

int tau_k(const Graph& g, const VertexSet& s, int k, const Budget& budget) {
  if (k < 0 || static_cast<std::size_t>(k) > s.size()) throw InputError("tau_k needs 0 <= k <= |S|");
  const std::vector<Vertex>& members = s.members();
  BudgetMeter meter(budget, "tau_k");
  int best = k;
  std::vector<Vertex> chosen;
  auto choose = [&](auto&& self, std::size_t from) -> void {
    if (best == 0) return;
    if (static_cast<int>(chosen.size()) == k) {
      meter.tick();
      best = std::min(best, tau(induced_subgraph(g, VertexSet(chosen)).graph, budget));
      return;
    }
    for (std::size_t i = from; i + (static_cast<std::size_t>(k) - chosen.size()) <= members.size(); ++i) {
      chosen.push_back(members[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  choose(choose, 0);
  return best;
}

DichotomyResult dichotomy_bipartite_cover(const Graph& g, const VertexSet& s, int k, const Budget& budget) {
  if (k < 1) throw InputError("k must be positive");
  if (s.size() < static_cast<std::size_t>(k)) throw PreconditionError("need |S| >= k");
  DichotomyResult r;
  r.tau_k = tau_k(g, s, k, budget);
  r.bound = 2 * k - 2 + r.tau_k;
  r.relaxed_bound = 3 * k - 3;
  r.connectivity = vertex_connectivity(g);
  r.packing = pack_odd_s_cycles(g, s, k, budget);
  if (r.packing) {
    r.bound_met = true;
    r.relaxed_met = true;
    return r;
  }
  r.cover = min_odd_cycle_cover(g, budget).members;
  r.s_cycle_cover = min_odd_s_cycle_cover(g, s, budget).members;
  r.bound_met = static_cast<int>(r.cover->size()) <= r.bound;
  r.relaxed_met = static_cast<int>(r.cover->size()) <= r.relaxed_bound;
  return r;
}

std::optional<CyclePacking> greedy_triangle_packing(const Graph& g, int k) {
  if (k < 0) throw InputError("k must be non-negative");
  std::vector<char> alive(static_cast<std::size_t>(g.order()), 1);
  CyclePacking out;
  for (int round = 0; round < k; ++round) {
    Vertex u = 0;
    while (u < g.order() && alive[static_cast<std::size_t>(u)] == 0) ++u;
    if (u == g.order()) return std::nullopt;
    std::optional<Edge> found;
    for (Vertex v : g.neighbors(u)) {
      if (found || alive[static_cast<std::size_t>(v)] == 0) continue;
      for (Vertex w : g.neighbors(v)) {
        if (w > v && alive[static_cast<std::size_t>(w)] != 0 && g.adjacent(u, w)) {
          found = Edge(v, w);
          break;
        }
      }
    }
    if (!found) return std::nullopt;
    out.cycles.push_back({{u, found->u, found->v}});
    for (Vertex v : {u, found->u, found->v}) alive[static_cast<std::size_t>(v)] = 0;
  }
  return out;
}

const char* to_string(MatchingFormResult::Branch b) {
  switch (b) {
    case MatchingFormResult::Branch::independent_set:
      return "independent-set";
    case MatchingFormResult::Branch::triangles:
      return "triangles";
    case MatchingFormResult::Branch::report:
      return "report";
  }
  return "report";
}

MatchingFormResult dichotomy_matching_form(const Graph& g, int k, const Budget& budget) {
  if (k < 1) throw InputError("k must be positive");
  MatchingFormResult out;
  const BitGraph bg(g);
  BudgetMeter meter(budget, "dichotomy_matching_form");
  std::vector<int> chosen;
  std::optional<CyclePacking> packing;
  // Independent k-sets in lexicographic order; the first one admitting a packing wins.
  auto choose = [&](auto&& self, int from, Mask blocked) -> bool {
    meter.tick();
    if (static_cast<int>(chosen.size()) == k) {
      const VertexSet set(chosen);
      if (!out.independent_set) out.independent_set = set;
      packing = pack_odd_s_cycles(g, set, k, budget);
      if (packing) out.independent_set = set;
      return packing.has_value();
    }
    for (int v = from; v < bg.n; ++v) {
      if ((blocked & bit(v)) != 0) continue;
      chosen.push_back(v);
      if (self(self, v + 1, blocked | bit(v) | bg.adj[static_cast<std::size_t>(v)])) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (choose(choose, 0, 0)) {
    out.branch = MatchingFormResult::Branch::independent_set;
    out.packing = std::move(packing);
    return out;
  }
  if (auto triangles = greedy_triangle_packing(g, k)) {
    out.branch = MatchingFormResult::Branch::triangles;
    out.packing = std::move(triangles);
    return out;
  }
  out.branch = MatchingFormResult::Branch::report;
  out.partition = canonical_nice_partition(g, budget);
  out.within_has_matching = has_matching_of_size(within_graph(g, out.partition->partition), k, budget);
  return out;
}

}  // namespace oddpack
