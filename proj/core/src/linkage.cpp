#include "oddpack/linkage.hpp"

#include <algorithm>
#include <set>

#include "bitgraph.hpp"
#include "oddpack/errors.hpp"
#include "path_masks.hpp"

namespace oddpack {

using detail::bit;
using detail::BitGraph;
using detail::Mask;

std::vector<Parity> Linkage::parities() const {
  std::vector<Parity> out;
  for (const auto& p : paths) out.push_back(p.size() % 2 == 0 ? Parity::odd : Parity::even);
  return out;
}

bool validate_linkage(const Graph& g, const TerminalSystem& ts, const Linkage& linkage, bool check_parity,
                      std::string* why) {
  auto fail = [&](std::string reason) {
    if (why != nullptr) *why = std::move(reason);
    return false;
  };
  if (linkage.paths.size() != ts.pairs.size()) return fail("wrong number of paths");
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t i = 0; i < ts.pairs.size(); ++i) {
    const auto& path = linkage.paths[i];
    const std::string name = "path " + std::to_string(i);
    if (path.size() < 2) return fail(name + " is too short");
    if (path.front() != ts.pairs[i].s || path.back() != ts.pairs[i].t) return fail(name + " has wrong endpoints");
    for (std::size_t j = 0; j < path.size(); ++j) {
      if (!g.has_vertex(path[j])) return fail(name + " leaves the graph");
      if (used[static_cast<std::size_t>(path[j])] != 0) return fail(name + " repeats a vertex");
      used[static_cast<std::size_t>(path[j])] = 1;
      if (j > 0 && !g.adjacent(path[j - 1], path[j])) return fail(name + " uses a non-edge");
    }
    if (check_parity) {
      const auto want = ts.demand(static_cast<int>(i));
      const Parity got = path.size() % 2 == 0 ? Parity::odd : Parity::even;
      if (want && *want != got) return fail(name + " has the wrong parity");
    }
  }
  if (why != nullptr) why->clear();
  return true;
}

namespace {

// Depth-first search used when the subset tables would be too large.
class PathDfs {
 public:
  PathDfs(const Graph& g, const TerminalSystem& ts, bool parity, BudgetMeter& meter)
      : g_(g), ts_(ts), parity_(parity), meter_(meter), used_(static_cast<std::size_t>(g.order()), 0) {
    for (const auto& p : ts.pairs) {
      used_[static_cast<std::size_t>(p.s)] = 1;
      used_[static_cast<std::size_t>(p.t)] = 1;
    }
  }

  std::optional<Linkage> run() {
    if (!pair_step(0)) return std::nullopt;
    return linkage_;
  }

 private:
  bool pair_step(std::size_t i) {
    if (i == ts_.pairs.size()) return true;
    linkage_.paths.push_back({ts_.pairs[i].s});
    const bool ok = walk(i, ts_.pairs[i].s);
    if (!ok) linkage_.paths.pop_back();
    return ok;
  }

  bool walk(std::size_t i, Vertex at) {
    meter_.tick();
    auto& path = linkage_.paths.back();
    for (Vertex w : g_.neighbors(at)) {
      if (w == ts_.pairs[i].t) {
        path.push_back(w);
        const auto want = parity_ ? ts_.demand(static_cast<int>(i)) : std::nullopt;
        const Parity got = path.size() % 2 == 0 ? Parity::odd : Parity::even;
        if ((!want || *want == got) && pair_step(i + 1)) return true;
        path.pop_back();
        continue;
      }
      if (used_[static_cast<std::size_t>(w)] != 0) continue;
      used_[static_cast<std::size_t>(w)] = 1;
      path.push_back(w);
      if (walk(i, w)) return true;
      path.pop_back();
      used_[static_cast<std::size_t>(w)] = 0;
    }
    return false;
  }

  const Graph& g_;
  const TerminalSystem& ts_;
  bool parity_;
  BudgetMeter& meter_;
  std::vector<char> used_;
  Linkage linkage_;
};

std::optional<Linkage> search_linkage(const Graph& g, const TerminalSystem& ts, bool parity, const Budget& budget,
                                      const char* what) {
  validate_terminal_system(g, ts);
  BudgetMeter meter(budget, what);
  if (ts.pairs.empty()) return Linkage{};
  const Mask terminals = g.order() <= detail::kMaxMaskVertices ? detail::to_mask(ts.terminals()) : 0;
  const bool tables = g.order() <= detail::kMaxMaskVertices &&
                      g.order() - 2 * (ts.k() - 1) <= detail::kMaxPathDomain;
  if (!tables) return PathDfs(g, ts, parity, meter).run();

  const BitGraph bg(g);
  std::vector<std::vector<Mask>> families;
  for (int i = 0; i < ts.k(); ++i) {
    const auto& pair = ts.pairs[static_cast<std::size_t>(i)];
    const detail::Domain domain(bg.all() & ~(terminals & ~(bit(pair.s) | bit(pair.t))));
    const detail::Local target = detail::Local{1} << domain.index_of(pair.t);
    const auto want = parity ? ts.demand(i) : std::nullopt;
    std::vector<detail::Local> found;
    detail::for_each_path_mask(bg, domain, pair.s, meter, [&](detail::Local mask, detail::Local ends) {
      if ((ends & target) == 0) return;
      const Parity got = std::popcount(mask) % 2 == 0 ? Parity::odd : Parity::even;
      if (!want || *want == got) found.push_back(mask);
    });
    std::vector<Mask> family;
    for (detail::Local m : detail::minimal_masks(domain, found)) family.push_back(domain.expand(m));
    if (family.empty()) return std::nullopt;
    families.push_back(std::move(family));
  }
  const std::vector<int> pick = detail::disjoint_selection(families, meter);
  if (pick.empty()) return std::nullopt;
  Linkage out;
  for (int i = 0; i < ts.k(); ++i) {
    const auto& pair = ts.pairs[static_cast<std::size_t>(i)];
    const Mask mask = families[static_cast<std::size_t>(i)][static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])];
    out.paths.push_back(detail::path_through(bg, mask, pair.s, pair.t));
  }
  return out;
}

}  // namespace

std::optional<Linkage> find_linkage(const Graph& g, const TerminalSystem& ts, const Budget& budget) {
  return search_linkage(g, ts, false, budget, "find_linkage");
}

std::optional<Linkage> find_parity_linkage(const Graph& g, const TerminalSystem& ts, const Budget& budget) {
  return search_linkage(g, ts, true, budget, "find_parity_linkage");
}

namespace {

// How pair i is routed: straight through primed neighbours, or across m_i.
struct Route {
  bool flip = false;
  Vertex x = -1;
  Vertex y = -1;
};

}  // namespace

std::optional<Linkage> assemble_parity_paths(const Graph& g, const NicePartition& np, const TerminalSystem& ts,
                                             const Matching& m, const AssemblyOptions& options) {
  validate_terminal_system(g, ts);
  const int k = ts.k();
  const int threshold = options.small_cover_threshold > 0 ? options.small_cover_threshold : 8 * k;
  const VertexSet& cover = np.inducing_cover.members;
  if (static_cast<int>(cover.size()) >= threshold) {
    throw PreconditionError("odd cycle cover of size " + std::to_string(cover.size()) + " is not below " +
                            std::to_string(threshold));
  }
  if (!is_parity_breaking(m, g, np.partition, ts)) throw PreconditionError("matching is not parity breaking");
  const VertexSet& part_a = np.partition.part_a;
  auto in_a = [&](Vertex v) { return part_a.contains(v); };

  std::vector<Route> routes(static_cast<std::size_t>(k));
  std::vector<Vertex> blocked = ts.terminals().members();
  for (std::size_t idx = 0; idx < m.size(); ++idx) {
    blocked.push_back(m.edges[idx].u);
    blocked.push_back(m.edges[idx].v);
  }
  for (int i = 0; i < k; ++i) {
    const auto& pair = ts.pairs[static_cast<std::size_t>(i)];
    const auto want = ts.demand(i);
    const Parity natural = in_a(pair.s) == in_a(pair.t) ? Parity::even : Parity::odd;
    if (!want || *want == natural) continue;
    const Edge e = *m.edge_for(i);
    Route& r = routes[static_cast<std::size_t>(i)];
    r.flip = true;
    if (e.touches(pair.s)) {
      r.x = pair.s;
      r.y = e.other(pair.s);
    } else if (e.touches(pair.t)) {
      r.y = pair.t;
      r.x = e.other(pair.t);
    } else {
      r.x = e.u;
      r.y = e.v;
    }
  }
  const VertexSet removed = VertexSet(blocked).unite(cover);

  // Vertices needing a primed neighbour, in route order.
  std::vector<Vertex> bases;
  for (int i = 0; i < k; ++i) {
    const auto& pair = ts.pairs[static_cast<std::size_t>(i)];
    const Route& r = routes[static_cast<std::size_t>(i)];
    if (!r.flip) {
      bases.insert(bases.end(), {pair.s, pair.t});
      continue;
    }
    if (r.x != pair.s) bases.insert(bases.end(), {pair.s, r.x});
    if (r.y != pair.t) bases.insert(bases.end(), {pair.t, r.y});
  }
  std::vector<std::vector<Vertex>> candidates;
  for (Vertex z : bases) {
    std::vector<Vertex> c;
    for (Vertex w : g.neighbors(z)) {
      if (!removed.contains(w) && in_a(w) != in_a(z)) c.push_back(w);
    }
    candidates.push_back(std::move(c));
  }

  const Subgraph rest = remove_vertices(g, removed);
  std::vector<Vertex> local(static_cast<std::size_t>(g.order()), -1);
  for (int v = 0; v < rest.graph.order(); ++v) local[static_cast<std::size_t>(rest.parent(v))] = v;

  std::vector<Vertex> primed(bases.size(), -1);
  std::set<Vertex> taken;
  int attempts = 0;
  std::optional<Linkage> result;

  auto compose = [&]() -> std::optional<Linkage> {
    std::vector<TerminalPair> inner;
    for (std::size_t b = 0; b < bases.size(); b += 2) {
      inner.push_back({local[static_cast<std::size_t>(primed[b])], local[static_cast<std::size_t>(primed[b + 1])]});
    }
    const auto link = find_linkage(rest.graph, TerminalSystem::plain(inner), options.budget);
    if (!link) return std::nullopt;
    Linkage out;
    std::size_t next = 0;
    auto inner_path = [&]() {
      return rest.parent_path(link->paths[next++]);
    };
    for (int i = 0; i < k; ++i) {
      const auto& pair = ts.pairs[static_cast<std::size_t>(i)];
      const Route& r = routes[static_cast<std::size_t>(i)];
      std::vector<Vertex> path{pair.s};
      auto append = [&](const std::vector<Vertex>& piece) { path.insert(path.end(), piece.begin(), piece.end()); };
      if (!r.flip) {
        append(inner_path());
      } else if (r.x != pair.s && r.y != pair.t) {
        append(inner_path());  // s' .. x'
        append({r.x, r.y});
        auto back = inner_path();  // t' .. y'
        std::reverse(back.begin(), back.end());
        append(back);
      } else if (r.x == pair.s && r.y != pair.t) {
        append({r.y});
        auto back = inner_path();
        std::reverse(back.begin(), back.end());
        append(back);
      } else if (r.x != pair.s) {
        append(inner_path());
        append({r.x});
      }
      path.push_back(pair.t);
      out.paths.push_back(std::move(path));
    }
    if (!validate_linkage(g, ts, out, true)) return std::nullopt;
    return out;
  };

  auto choose = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == bases.size()) {
      ++attempts;
      result = compose();
      return result.has_value() || attempts >= options.max_attempts;
    }
    for (Vertex w : candidates[pos]) {
      if (taken.contains(w)) continue;
      taken.insert(w);
      primed[pos] = w;
      if (self(self, pos + 1)) return true;
      taken.erase(w);
    }
    return false;
  };
  choose(choose, 0);
  return result;
}

namespace {

std::vector<VertexSet> components_of(const Graph& g, const VertexSet& within) {
  const Subgraph sub = induced_subgraph(g, within);
  std::vector<char> seen(static_cast<std::size_t>(sub.graph.order()), 0);
  std::vector<VertexSet> out;
  for (int root = 0; root < sub.graph.order(); ++root) {
    if (seen[static_cast<std::size_t>(root)] != 0) continue;
    std::vector<Vertex> comp;
    std::vector<int> stack{root};
    seen[static_cast<std::size_t>(root)] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      comp.push_back(sub.parent(v));
      for (int w : sub.graph.neighbors(v)) {
        if (seen[static_cast<std::size_t>(w)] == 0) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    out.emplace_back(std::move(comp));
  }
  return out;
}

// Repeatedly deletes vertices of degree below `min_degree` inside `within`.
VertexSet peel(const Graph& g, const VertexSet& within, int min_degree) {
  std::vector<char> alive(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> degree(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : within) alive[static_cast<std::size_t>(v)] = 1;
  std::vector<Vertex> queue;
  for (Vertex v : within) {
    for (Vertex w : g.neighbors(v)) degree[static_cast<std::size_t>(v)] += alive[static_cast<std::size_t>(w)];
    if (degree[static_cast<std::size_t>(v)] < min_degree) queue.push_back(v);
  }
  while (!queue.empty()) {
    const Vertex v = queue.back();
    queue.pop_back();
    if (alive[static_cast<std::size_t>(v)] == 0) continue;
    alive[static_cast<std::size_t>(v)] = 0;
    for (Vertex w : g.neighbors(v)) {
      if (alive[static_cast<std::size_t>(w)] != 0 && --degree[static_cast<std::size_t>(w)] < min_degree) {
        queue.push_back(w);
      }
    }
  }
  std::vector<Vertex> keep;
  for (Vertex v : within) {
    if (alive[static_cast<std::size_t>(v)] != 0) keep.push_back(v);
  }
  return VertexSet(std::move(keep));
}

}  // namespace

std::optional<Subgraph> dense_subgraph(const Graph& g, int k, const Budget& budget) {
  if (k < 1) throw InputError("dense_subgraph needs k >= 1");
  BudgetMeter meter(budget, "dense_subgraph");
  const int connectivity = 2 * k;
  const int density = 5 * k;
  std::set<VertexSet> explored;

  auto explore = [&](auto&& self, const VertexSet& s) -> std::optional<Subgraph> {
    meter.tick();
    if (!explored.insert(s).second) return std::nullopt;
    const VertexSet core = peel(g, s, connectivity);
    for (const VertexSet& comp : components_of(g, core)) {
      if (static_cast<int>(comp.size()) <= connectivity) continue;
      Subgraph h = induced_subgraph(g, comp);
      const auto order = static_cast<std::size_t>(h.graph.order());
      const bool dense = h.graph.size() >= static_cast<std::size_t>(density) * order;
      const int kappa = vertex_connectivity(h.graph);
      if (dense && kappa >= connectivity) return h;
      const VertexSet denser = peel(g, comp, density + 1);
      if (!denser.empty() && denser != comp) {
        if (auto found = self(self, denser)) return found;
      }
      if (kappa < connectivity) {
        const VertexSet cut = h.parent_set(min_vertex_separator(h.graph));
        for (const VertexSet& piece : components_of(g, comp.minus(cut))) {
          if (auto found = self(self, piece.unite(cut))) return found;
        }
      }
    }
    return std::nullopt;
  };

  std::vector<Vertex> all(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) all[static_cast<std::size_t>(v)] = v;
  return explore(explore, VertexSet(std::move(all)));
}

bool is_odd_z_path(const Graph& g, const VertexSet& z, const ZPath& path) {
  const auto& p = path.vertices;
  if (p.size() < 2 || p.size() % 2 != 0) return false;
  std::set<Vertex> seen;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!g.has_vertex(p[i]) || !seen.insert(p[i]).second) return false;
    if (i > 0 && !g.adjacent(p[i - 1], p[i])) return false;
    const bool end = i == 0 || i + 1 == p.size();
    if (z.contains(p[i]) != end) return false;
  }
  return true;
}

ZPathCertificate odd_z_path_dichotomy(const Graph& g, const VertexSet& z, int ell, const Budget& budget) {
  if (ell < 1) throw InputError("ell must be positive");
  for (Vertex v : z) {
    if (!g.has_vertex(v)) throw InputError("Z vertex outside the graph");
  }
  BudgetMeter meter(budget, "odd_z_path_dichotomy");
  const BitGraph bg(g);
  const Mask zmask = detail::to_mask(z);
  std::vector<Mask> found;
  for (Vertex start : z) {
    const detail::Domain domain((bg.all() & ~zmask) | bit(start));
    const Mask later = zmask & ~detail::full_mask(start + 1);
    detail::for_each_path_mask(bg, domain, start, meter, [&](detail::Local mask, detail::Local ends) {
      // Closing at a Z vertex adds one edge, so the path is odd when the table path has odd vertex count.
      if (std::popcount(mask) % 2 == 0) return;
      Mask reach = 0;
      const Mask global_ends = domain.expand(ends);
      detail::for_each_bit(global_ends, [&](int v) { reach |= bg.adj[static_cast<std::size_t>(v)]; });
      const Mask body = domain.expand(mask);
      detail::for_each_bit(reach & later, [&](int other) { found.push_back(body | bit(other)); });
    });
  }
  std::sort(found.begin(), found.end(), [](Mask a, Mask b) {
    return detail::popcount(a) != detail::popcount(b) ? detail::popcount(a) < detail::popcount(b) : a < b;
  });
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<Mask> minimal;
  for (Mask m : found) {
    const bool dominated = std::any_of(minimal.begin(), minimal.end(), [&](Mask k2) { return (k2 & m) == k2; });
    if (!dominated) minimal.push_back(m);
  }

  ZPathCertificate cert;
  cert.ell = ell;
  const std::vector<int> pick = detail::disjoint_members(minimal, ell, meter);
  if (!pick.empty()) {
    for (int idx : pick) {
      const Mask m = minimal[static_cast<std::size_t>(idx)];
      const Mask ends = m & zmask;
      const int a = detail::lowest(ends);
      const int b = detail::lowest(ends & (ends - 1));
      cert.packing.push_back({detail::path_through(bg, m, a, b)});
    }
    return cert;
  }
  const Mask hit = minimal.empty() ? 0 : detail::min_hitting_set(minimal, meter);
  cert.hitting_set = detail::to_set(hit);
  cert.violation = detail::popcount(hit) > 2 * ell - 2;
  return cert;
}

}  // namespace oddpack
