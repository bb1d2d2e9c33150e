#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <random>
#include <set>

namespace oracle {

namespace {

std::vector<Mask> adjacency(const Graph& g) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.order()), 0);
  for (const auto& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)] |= Mask{1} << e.v;
    adj[static_cast<std::size_t>(e.v)] |= Mask{1} << e.u;
  }
  return adj;
}

Mask all_of(const Graph& g) { return g.order() >= 64 ? ~Mask{0} : (Mask{1} << g.order()) - 1; }

bool in(Mask m, int v) { return ((m >> v) & 1U) != 0; }

// Calls f on every r-subset of 0..n-1 in lexicographic order until f returns true.
bool combinations(int n, int r, const std::function<bool(const std::vector<int>&)>& f) {
  std::vector<int> c(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) c[static_cast<std::size_t>(i)] = i;
  if (r > n) return false;
  while (true) {
    if (f(c)) return true;
    int i = r - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - r + i) --i;
    if (i < 0) return false;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
}

std::vector<int> smallest_set(int n, const std::function<bool(Mask)>& ok) {
  for (int r = 0; r <= n; ++r) {
    std::vector<int> found;
    if (combinations(n, r, [&](const std::vector<int>& c) {
          if (!ok(mask_of(c))) return false;
          found = c;
          return true;
        })) {
      return found;
    }
  }
  return {};
}

int tau_of_edges(int n, const std::vector<oddpack::Edge>& edges) {
  return static_cast<int>(smallest_set(n, [&](Mask x) {
                            return std::all_of(edges.begin(), edges.end(),
                                               [&](const oddpack::Edge& e) { return in(x, e.u) || in(x, e.v); });
                          }).size());
}

}  // namespace

Mask mask_of(const std::vector<int>& vs) {
  Mask m = 0;
  for (int v : vs) m |= Mask{1} << v;
  return m;
}

std::vector<int> members(Mask m) {
  std::vector<int> out;
  for (int v = 0; v < 64; ++v) {
    if (in(m, v)) out.push_back(v);
  }
  return out;
}

std::vector<std::vector<int>> all_cycles(const Graph& g, Mask alive) {
  const auto adj = adjacency(g);
  alive &= all_of(g);
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::function<void(int, Mask)> dfs = [&](int s, Mask used) {
    const int u = path.back();
    if (path.size() >= 3 && in(adj[static_cast<std::size_t>(u)], s) && path[1] < path.back()) out.push_back(path);
    for (int w = s + 1; w < g.order(); ++w) {
      if (!in(alive, w) || in(used, w) || !in(adj[static_cast<std::size_t>(u)], w)) continue;
      path.push_back(w);
      dfs(s, used | (Mask{1} << w));
      path.pop_back();
    }
  };
  for (int s = 0; s < g.order(); ++s) {
    if (!in(alive, s)) continue;
    path = {s};
    dfs(s, Mask{1} << s);
  }
  return out;
}

bool has_odd_cycle_through(const Graph& g, Mask s, Mask alive) {
  const auto adj = adjacency(g);
  alive &= all_of(g);
  std::function<bool(int, int, Mask, int)> dfs = [&](int start, int u, Mask used, int count) {
    if (count >= 3 && count % 2 == 1 && in(adj[static_cast<std::size_t>(u)], start)) return true;
    for (int w = 0; w < g.order(); ++w) {
      if (in(alive, w) && !in(used, w) && in(adj[static_cast<std::size_t>(u)], w) &&
          dfs(start, w, used | (Mask{1} << w), count + 1)) {
        return true;
      }
    }
    return false;
  };
  for (int v : members(s & alive)) {
    if (dfs(v, v, Mask{1} << v, 1)) return true;
  }
  return false;
}

bool bipartite(const Graph& g, Mask alive) {
  const auto adj = adjacency(g);
  std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
  for (int r = 0; r < g.order(); ++r) {
    if (!in(alive, r) || colour[static_cast<std::size_t>(r)] >= 0) continue;
    colour[static_cast<std::size_t>(r)] = 0;
    std::vector<int> queue{r};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int u = queue[i];
      for (int w : members(adj[static_cast<std::size_t>(u)] & alive)) {
        if (colour[static_cast<std::size_t>(w)] < 0) {
          colour[static_cast<std::size_t>(w)] = 1 - colour[static_cast<std::size_t>(u)];
          queue.push_back(w);
        } else if (colour[static_cast<std::size_t>(w)] == colour[static_cast<std::size_t>(u)]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<int> min_odd_cycle_cover(const Graph& g) {
  const Mask all = all_of(g);
  return smallest_set(g.order(), [&](Mask x) { return bipartite(g, all & ~x); });
}

std::vector<int> min_odd_s_cycle_cover(const Graph& g, Mask s) {
  const Mask all = all_of(g);
  return smallest_set(g.order(), [&](Mask x) { return !has_odd_cycle_through(g, s & ~x, all & ~x); });
}

std::vector<int> min_vertex_cover(const Graph& g) {
  const auto& edges = g.edges();
  return smallest_set(g.order(), [&](Mask x) {
    return std::all_of(edges.begin(), edges.end(), [&](const oddpack::Edge& e) { return in(x, e.u) || in(x, e.v); });
  });
}

int matching_number(const Graph& g) {
  const auto adj = adjacency(g);
  std::function<int(Mask)> best = [&](Mask alive) {
    for (int v : members(alive)) {
      const Mask nb = adj[static_cast<std::size_t>(v)] & alive;
      if (nb == 0) continue;
      int out = best(alive & ~(Mask{1} << v));
      for (int w : members(nb)) out = std::max(out, 1 + best(alive & ~(Mask{1} << v) & ~(Mask{1} << w)));
      return out;
    }
    return 0;
  };
  return best(all_of(g));
}

int connectivity(const Graph& g) {
  const int n = g.order();
  if (static_cast<int>(g.size()) == n * (n - 1) / 2) return std::max(0, n - 1);
  const auto adj = adjacency(g);
  auto disconnected = [&](Mask alive) {
    const auto left = members(alive);
    if (left.size() < 2) return false;
    Mask seen = Mask{1} << left[0];
    std::vector<int> stack{left[0]};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : members(adj[static_cast<std::size_t>(u)] & alive & ~seen)) {
        seen |= Mask{1} << w;
        stack.push_back(w);
      }
    }
    return seen != alive;
  };
  return static_cast<int>(smallest_set(n, [&](Mask x) { return disconnected(all_of(g) & ~x); }).size());
}

bool tau_critical(const Graph& g) {
  const auto& edges = g.edges();
  const int t = tau_of_edges(g.order(), edges);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto rest = edges;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (tau_of_edges(g.order(), rest) >= t) return false;
  }
  for (int v = 0; v < g.order(); ++v) {
    std::vector<oddpack::Edge> rest;
    for (const auto& e : edges) {
      if (!e.touches(v)) rest.push_back(e);
    }
    if (tau_of_edges(g.order(), rest) >= t) return false;
  }
  return true;
}

std::vector<std::vector<int>> paths(const Graph& g, int s, int t, Mask blocked) {
  const auto adj = adjacency(g);
  std::vector<std::vector<int>> out;
  std::vector<int> path{s};
  std::function<void(int, Mask)> dfs = [&](int u, Mask used) {
    if (u == t) {
      out.push_back(path);
      return;
    }
    for (int w : members(adj[static_cast<std::size_t>(u)] & ~used & ~blocked)) {
      path.push_back(w);
      dfs(w, used | (Mask{1} << w));
      path.pop_back();
    }
  };
  if (!in(blocked, s) && !in(blocked, t)) dfs(s, Mask{1} << s);
  return out;
}

bool linkage_exists(const Graph& g, const std::vector<std::pair<int, int>>& pairs, const std::vector<int>& parity) {
  Mask terminals = 0;
  for (const auto& [s, t] : pairs) terminals |= (Mask{1} << s) | (Mask{1} << t);
  std::function<bool(std::size_t, Mask)> rec = [&](std::size_t i, Mask used) {
    if (i == pairs.size()) return true;
    const auto [s, t] = pairs[i];
    const Mask own = (Mask{1} << s) | (Mask{1} << t);
    for (const auto& p : paths(g, s, t, used | (terminals & ~own))) {
      const int len = static_cast<int>(p.size()) - 1;
      if (parity[i] >= 0 && len % 2 != parity[i]) continue;
      if (rec(i + 1, used | mask_of(p))) return true;
    }
    return false;
  };
  return rec(0, 0);
}

std::vector<Mask> odd_z_paths(const Graph& g, Mask z) {
  const auto adj = adjacency(g);
  std::set<Mask> out;
  for (int a : members(z & all_of(g))) {
    std::function<void(int, Mask, int)> dfs = [&](int u, Mask used, int count) {
      for (int b : members(adj[static_cast<std::size_t>(u)] & z)) {
        if (b > a && count % 2 == 1) out.insert(used | (Mask{1} << b));
      }
      for (int w : members(adj[static_cast<std::size_t>(u)] & ~z & ~used)) dfs(w, used | (Mask{1} << w), count + 1);
    };
    dfs(a, Mask{1} << a, 1);
  }
  return {out.begin(), out.end()};
}

int max_disjoint(const std::vector<Mask>& family) {
  std::function<int(std::size_t, Mask)> rec = [&](std::size_t i, Mask used) {
    if (i == family.size()) return 0;
    int best = rec(i + 1, used);
    if ((family[i] & used) == 0) best = std::max(best, 1 + rec(i + 1, used | family[i]));
    return best;
  };
  return rec(0, 0);
}

int min_hitting_set(const std::vector<Mask>& family) {
  Mask universe = 0;
  for (Mask m : family) universe |= m;
  const auto verts = members(universe);
  for (int r = 0; r <= static_cast<int>(verts.size()); ++r) {
    if (combinations(static_cast<int>(verts.size()), r, [&](const std::vector<int>& c) {
          Mask x = 0;
          for (int i : c) x |= Mask{1} << verts[static_cast<std::size_t>(i)];
          return std::all_of(family.begin(), family.end(), [&](Mask m) { return (m & x) != 0; });
        })) {
      return r;
    }
  }
  return -1;
}

int max_odd_s_cycle_packing(const Graph& g, Mask s) {
  std::vector<Mask> family;
  for (const auto& c : all_cycles(g)) {
    const Mask m = mask_of(c);
    if (c.size() % 2 == 1 && (m & s) != 0) family.push_back(m);
  }
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return max_disjoint(family);
}

bool avoiding_matching_exists(const Graph& h, const std::vector<std::pair<int, int>>& pairs) {
  std::function<bool(std::size_t, Mask)> rec = [&](std::size_t i, Mask used) {
    if (i == pairs.size()) return true;
    Mask forbidden = used;
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if (j != i) forbidden |= (Mask{1} << pairs[j].first) | (Mask{1} << pairs[j].second);
    }
    for (const auto& e : h.edges()) {
      if (in(forbidden, e.u) || in(forbidden, e.v)) continue;
      if (rec(i + 1, used | (Mask{1} << e.u) | (Mask{1} << e.v))) return true;
    }
    return false;
  };
  return rec(0, 0);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<oddpack::Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

}  // namespace oracle
