#include "path_masks.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>

#include "oddpack/errors.hpp"

namespace oddpack::detail {

Domain::Domain(Mask members) : members_(members), vertices_(to_vector(members)) {
  if (size() > kMaxPathDomain) {
    throw ResourceLimitError("path tables limited to " + std::to_string(kMaxPathDomain) + " vertices, got " +
                             std::to_string(size()));
  }
}

Mask Domain::expand(Local local) const {
  Mask out = 0;
  for (Local l = local; l != 0; l &= l - 1) out |= bit(vertices_[static_cast<std::size_t>(std::countr_zero(l))]);
  return out;
}

Local Domain::compress(Mask global) const {
  Local out = 0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if ((global & bit(vertices_[i])) != 0) out |= Local{1} << i;
  }
  return out;
}

int Domain::index_of(int vertex) const {
  const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), vertex);
  if (it == vertices_.end() || *it != vertex) return -1;
  return static_cast<int>(it - vertices_.begin());
}

std::vector<Local> Domain::local_adjacency(const BitGraph& g) const {
  std::vector<Local> out;
  out.reserve(vertices_.size());
  for (int v : vertices_) out.push_back(compress(g.adj[static_cast<std::size_t>(v)]));
  return out;
}

std::vector<Local> minimal_masks(const Domain& domain, const std::vector<Local>& family) {
  if (family.empty()) return {};
  const int d = domain.size();
  std::vector<char> below(std::size_t{1} << d, 0);
  for (Local m : family) below[m] = 1;
  // below[m] becomes "some member is a subset of m".
  for (int b = 0; b < d; ++b) {
    for (Local m = 0; m < (Local{1} << d); ++m) {
      if ((m >> b) & 1U) below[m] = static_cast<char>(below[m] | below[m ^ (Local{1} << b)]);
    }
  }
  std::vector<Local> out;
  for (Local m : family) {
    bool minimal = true;
    for (Local rest = m; rest != 0 && minimal; rest &= rest - 1) {
      if (below[m & ~(rest & (~rest + 1))] != 0) minimal = false;
    }
    if (minimal) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [](Local a, Local b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

bool extend_path(const BitGraph& g, Mask mask, Mask visited, int at, int t, std::vector<int>& path,
                 std::unordered_set<Mask>& dead) {
  if (visited == mask) return at == t;
  if (at == t) return false;
  // Dead states are keyed by (visited, at); `at` fits in the top bits only when n < 58.
  const Mask key = visited ^ (static_cast<Mask>(at) << 58);
  if (g.n < 58 && dead.contains(key)) return false;
  bool ok = false;
  for_each_bit(g.neighbors(at, mask & ~visited), [&](int w) {
    if (ok) return;
    path.push_back(w);
    if (extend_path(g, mask, visited | bit(w), w, t, path, dead)) {
      ok = true;
      return;
    }
    path.pop_back();
  });
  if (!ok && g.n < 58) dead.insert(key);
  return ok;
}

}  // namespace

std::vector<int> path_through(const BitGraph& g, Mask mask, int s, int t) {
  if ((mask & bit(s)) == 0 || (mask & bit(t)) == 0) return {};
  std::vector<int> path{s};
  std::unordered_set<Mask> dead;
  if (extend_path(g, mask, bit(s), s, t, path, dead)) return path;
  return {};
}

std::vector<int> cycle_through(const BitGraph& g, Mask mask) {
  if (popcount(mask) < 3 || popcount(mask) % 2 == 0) return {};
  const int s = lowest(mask);
  std::vector<int> out;
  for_each_bit(g.neighbors(s, mask), [&](int w) {
    if (out.empty()) out = path_through(g, mask, s, w);
  });
  return out;
}

namespace {

struct SelectionSearch {
  const std::vector<std::vector<Mask>>& families;
  std::vector<std::size_t> order;
  std::vector<int> chosen;
  std::vector<std::unordered_set<Mask>> failed;
  BudgetMeter& meter;

  bool run(std::size_t pos, Mask used) {
    meter.tick();
    if (pos == order.size()) return true;
    if (failed[pos].contains(used)) return false;
    const auto& fam = families[order[pos]];
    for (std::size_t i = 0; i < fam.size(); ++i) {
      if ((fam[i] & used) != 0) continue;
      chosen[order[pos]] = static_cast<int>(i);
      if (run(pos + 1, used | fam[i])) return true;
    }
    failed[pos].insert(used);
    return false;
  }
};

}  // namespace

std::vector<int> disjoint_selection(const std::vector<std::vector<Mask>>& families, BudgetMeter& meter) {
  SelectionSearch search{families, {}, std::vector<int>(families.size(), -1), {}, meter};
  search.order.resize(families.size());
  std::iota(search.order.begin(), search.order.end(), std::size_t{0});
  std::stable_sort(search.order.begin(), search.order.end(),
                   [&](std::size_t a, std::size_t b) { return families[a].size() < families[b].size(); });
  search.failed.resize(families.size());
  if (!search.run(0, 0)) return {};
  return search.chosen;
}

std::vector<int> disjoint_members(const std::vector<Mask>& family, int count, BudgetMeter& meter) {
  std::vector<int> chosen;
  std::set<std::pair<std::size_t, Mask>> failed_states;
  auto run = [&](auto&& self, std::size_t from, Mask used) -> bool {
    meter.tick();
    if (static_cast<int>(chosen.size()) == count) return true;
    const std::pair<std::size_t, Mask> key{from, used};
    if (failed_states.contains(key)) return false;
    for (std::size_t i = from; i < family.size(); ++i) {
      if ((family[i] & used) != 0) continue;
      chosen.push_back(static_cast<int>(i));
      if (self(self, i + 1, used | family[i])) return true;
      chosen.pop_back();
    }
    failed_states.insert(key);
    return false;
  };
  if (count <= 0) return {};
  if (!run(run, 0, 0)) return {};
  return chosen;
}

Mask min_hitting_set(const std::vector<Mask>& family, BudgetMeter& meter) {
  if (std::find(family.begin(), family.end(), Mask{0}) != family.end()) {
    throw PreconditionError("cannot hit an empty set");
  }
  Mask result = 0;
  auto within = [&](auto&& self, Mask chosen, int budget) -> bool {
    meter.tick();
    const Mask* unhit = nullptr;
    for (const Mask& m : family) {
      if ((m & chosen) != 0) continue;
      if (unhit == nullptr || popcount(m) < popcount(*unhit)) unhit = &m;
    }
    if (unhit == nullptr) {
      result = chosen;
      return true;
    }
    if (budget == 0) return false;
    // Greedy disjoint unhit members bound the remaining need from below.
    Mask taken = chosen;
    int disjoint = 0;
    for (const Mask& m : family) {
      if ((m & chosen) != 0 || (m & taken) != 0) continue;
      taken |= m;
      ++disjoint;
    }
    if (disjoint > budget) return false;
    bool ok = false;
    for_each_bit(*unhit, [&](int v) {
      if (!ok) ok = self(self, chosen | bit(v), budget - 1);
    });
    return ok;
  };
  for (int size = 0;; ++size) {
    if (within(within, 0, size)) return result;
  }
}

}  // namespace oddpack::detail
