#include "oddpack/covers.hpp"

#include <algorithm>

#include "bitgraph.hpp"
#include "cover_search.hpp"

namespace oddpack {

namespace detail {

std::vector<int> OddCycleSearch::cycle(Mask alive) const {
  std::vector<int> c = shortest_odd_cycle(g_, alive);
  if (!s_mode_ || c.empty()) return c;
  for (int v : c) {
    if ((s_ & bit(v)) != 0) return c;
  }
  // The shortest odd cycle misses S; fall back to the block-based search.
  const auto found = find_odd_s_cycle(g_.to_graph(alive), to_set(s_ & alive));
  if (!found) return {};
  return found->vertices;
}

int OddCycleSearch::lower_bound(Mask alive, Mask forbidden, int cap) const {
  int count = 0;
  while (count <= cap) {
    const auto c = cycle(alive);
    if (c.empty()) break;
    Mask cm = 0;
    for (int v : c) cm |= bit(v);
    if ((cm & ~forbidden) == 0) return kInfeasible;
    alive &= ~cm;
    ++count;
  }
  return count;
}

bool OddCycleSearch::feasible(Mask alive, Mask forbidden, int budget, std::vector<int>* chosen) {
  meter_.tick();
  const auto c = cycle(alive);
  if (c.empty()) return true;
  if (budget <= 0) return false;
  if (lower_bound(alive, forbidden, budget) > budget) return false;
  Mask banned = forbidden;
  for (int v : c) {
    if ((forbidden & bit(v)) != 0) continue;
    if (chosen != nullptr) chosen->push_back(v);
    if (feasible(alive & ~bit(v), banned, budget - 1, chosen)) return true;
    if (chosen != nullptr) chosen->pop_back();
    banned |= bit(v);
  }
  return false;
}

void OddCycleSearch::enumerate(Mask alive, Mask forbidden, int budget, Mask chosen, std::vector<Mask>& out) {
  meter_.tick();
  const auto c = cycle(alive);
  if (c.empty()) {
    out.push_back(chosen);
    return;
  }
  if (budget <= 0 || lower_bound(alive, forbidden, budget) > budget) return;
  Mask banned = forbidden;
  for (int v : c) {
    if ((forbidden & bit(v)) != 0) continue;
    enumerate(alive & ~bit(v), banned, budget - 1, chosen | bit(v), out);
    banned |= bit(v);
  }
}

int OddCycleSearch::minimum(Mask alive) {
  int b = std::max(0, lower_bound(alive, 0, g_.n));
  while (!feasible(alive, 0, b, nullptr)) ++b;
  return b;
}

Mask OddCycleSearch::lex_min_cover(Mask alive) {
  int remaining = minimum(alive);
  Mask forced = 0;
  Mask forbidden = 0;
  for_each_bit(alive, [&](int v) {
    if (remaining == 0) return;
    if (feasible(alive & ~forced & ~bit(v), forbidden, remaining - 1, nullptr)) {
      forced |= bit(v);
      --remaining;
    } else {
      forbidden |= bit(v);
    }
  });
  return forced;
}

}  // namespace detail

using detail::Mask;

OddCycleCover min_odd_cycle_cover(const Graph& g, const Budget& budget) {
  if (is_bipartite(g)) return {VertexSet{}, true};
  const detail::BitGraph bg(g);
  BudgetMeter meter(budget, "min_odd_cycle_cover");
  detail::OddCycleSearch search(bg, meter);
  return {detail::to_set(search.lex_min_cover(bg.all())), true};
}

OddSCycleCover min_odd_s_cycle_cover(const Graph& g, const VertexSet& s, const Budget& budget) {
  if (s.empty() || !find_odd_s_cycle(g, s)) return {VertexSet{}, s};
  const detail::BitGraph bg(g);
  BudgetMeter meter(budget, "min_odd_s_cycle_cover");
  detail::OddCycleSearch search(bg, meter, detail::to_mask(s));
  return {detail::to_set(search.lex_min_cover(bg.all())), s};
}

std::vector<VertexSet> all_min_odd_cycle_covers(const Graph& g, const Budget& budget) {
  if (is_bipartite(g)) return {VertexSet{}};
  const detail::BitGraph bg(g);
  BudgetMeter meter(budget, "all_min_odd_cycle_covers");
  detail::OddCycleSearch search(bg, meter);
  const int size = search.minimum(bg.all());
  std::vector<Mask> masks;
  search.enumerate(bg.all(), 0, size, 0, masks);
  std::vector<VertexSet> out;
  out.reserve(masks.size());
  for (Mask m : masks) out.push_back(detail::to_set(m));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_odd_cycle_cover(const Graph& g, const VertexSet& x) {
  return is_bipartite(remove_vertices(g, x).graph).has_value();
}

bool verify_cover(const Graph& g, const VertexSet& s, const VertexSet& x) {
  const Subgraph rest = remove_vertices(g, x);
  return !find_odd_s_cycle(rest.graph, to_local(rest, s.minus(x))).has_value();
}

}  // namespace oddpack
