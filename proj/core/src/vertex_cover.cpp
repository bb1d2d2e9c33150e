#include "vertex_cover.hpp"

namespace oddpack::detail {

int greedy_matching_size(const BitGraph& g, Mask alive) {
  int size = 0;
  Mask free = alive;
  for_each_bit(alive, [&](int u) {
    if ((free & bit(u)) == 0) return;
    const Mask nb = g.adj[static_cast<std::size_t>(u)] & free;
    if (nb != 0) {
      free &= ~(bit(u) | bit(lowest(nb)));
      ++size;
    }
  });
  return size;
}

namespace {

// Vertex cover number of a graph with maximum degree <= 2 (disjoint paths and cycles).
int paths_and_cycles_cover(const BitGraph& g, Mask alive) {
  int total = 0;
  Mask unseen = alive;
  while (unseen != 0) {
    const int root = lowest(unseen);
    Mask comp = bit(root);
    Mask frontier = comp;
    while (frontier != 0) {
      Mask next = 0;
      for_each_bit(frontier, [&](int v) { next |= g.adj[static_cast<std::size_t>(v)] & alive; });
      frontier = next & ~comp;
      comp |= frontier;
    }
    unseen &= ~comp;
    int vertices = popcount(comp);
    int degree_sum = 0;
    for_each_bit(comp, [&](int v) { degree_sum += popcount(g.adj[static_cast<std::size_t>(v)] & alive); });
    const int edges = degree_sum / 2;
    total += (edges == vertices) ? (vertices + 1) / 2 : vertices / 2;
  }
  return total;
}

}  // namespace

bool vc_within(const BitGraph& g, Mask alive, int budget, BudgetMeter& meter) {
  meter.tick();
  // Degree-0 and degree-1 reductions.
  bool changed = true;
  while (changed) {
    changed = false;
    if (budget < 0) return false;
    for (Mask rest = alive; rest != 0; rest &= rest - 1) {
      const int v = lowest(rest);
      if ((alive & bit(v)) == 0) continue;
      const Mask nb = g.adj[static_cast<std::size_t>(v)] & alive;
      if (nb == 0) {
        alive &= ~bit(v);
      } else if ((nb & (nb - 1)) == 0) {
        alive &= ~(bit(v) | nb);
        --budget;
        changed = true;
      }
    }
  }
  if (budget < 0) return false;
  if (alive == 0) return true;
  if (greedy_matching_size(g, alive) > budget) return false;

  int pivot = -1;
  int pivot_degree = -1;
  for_each_bit(alive, [&](int v) {
    const int d = popcount(g.adj[static_cast<std::size_t>(v)] & alive);
    if (d > pivot_degree) {
      pivot = v;
      pivot_degree = d;
    }
  });
  if (pivot_degree <= 2) return paths_and_cycles_cover(g, alive) <= budget;

  const Mask nb = g.adj[static_cast<std::size_t>(pivot)] & alive;
  if (vc_within(g, alive & ~bit(pivot), budget - 1, meter)) return true;
  return pivot_degree <= budget && vc_within(g, alive & ~(bit(pivot) | nb), budget - pivot_degree, meter);
}

int vc_number(const BitGraph& g, Mask alive, BudgetMeter& meter) {
  int k = greedy_matching_size(g, alive);
  while (!vc_within(g, alive, k, meter)) ++k;
  return k;
}

Mask lex_min_vertex_cover(const BitGraph& g, Mask alive, BudgetMeter& meter) {
  int remaining = vc_number(g, alive, meter);
  Mask cover = 0;
  // Include each vertex, in id order, whenever a minimum cover can still contain it.
  for_each_bit(alive, [&](int v) {
    if ((alive & bit(v)) == 0) return;
    if (remaining == 0) return;
    if (vc_within(g, alive & ~bit(v), remaining - 1, meter)) {
      cover |= bit(v);
      alive &= ~bit(v);
      --remaining;
    } else {
      const Mask nb = g.adj[static_cast<std::size_t>(v)] & alive;
      cover |= nb;
      alive &= ~(bit(v) | nb);
      remaining -= popcount(nb);
    }
  });
  return cover;
}

}  // namespace oddpack::detail
