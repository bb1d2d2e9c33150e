#pragma once

#include <cstdint>
#include <vector>

#include "bitgraph.hpp"
#include "oddpack/budget.hpp"

namespace oddpack::detail {

/// Largest vertex domain handled by the subset tables (2^22 entries).
inline constexpr int kMaxPathDomain = 22;

using Local = std::uint32_t;

/// A vertex subset compressed to indices 0..size-1 for table lookups.
class Domain {
 public:
  explicit Domain(Mask members);

  int size() const noexcept { return static_cast<int>(vertices_.size()); }
  Mask members() const noexcept { return members_; }
  Mask expand(Local local) const;
  Local compress(Mask global) const;
  int index_of(int vertex) const;
  /// Adjacency within the domain, indexed by local id.
  std::vector<Local> local_adjacency(const BitGraph& g) const;

 private:
  Mask members_;
  std::vector<int> vertices_;
};

/// Calls f(vertex_mask, end_mask) for every vertex set that carries a simple
/// path starting at `source` inside `domain`; `end_mask` holds every possible
/// last vertex. Both masks are local to `domain`.
template <class F>
void for_each_path_mask(const BitGraph& g, const Domain& domain, int source, BudgetMeter& meter, F&& f);

/// Inclusion-minimal members of `family` (local masks over `domain`), ordered
/// by size and then by value.
std::vector<Local> minimal_masks(const Domain& domain, const std::vector<Local>& family);

/// Simple s-t path visiting exactly the vertices of `mask`; empty if none.
std::vector<int> path_through(const BitGraph& g, Mask mask, int s, int t);

/// Odd cycle visiting exactly the vertices of `mask`; empty if none.
std::vector<int> cycle_through(const BitGraph& g, Mask mask);

/// Picks one mask per family, pairwise disjoint, families tried fewest-first.
/// Returns the chosen index into each family, or empty if impossible.
std::vector<int> disjoint_selection(const std::vector<std::vector<Mask>>& families, BudgetMeter& meter);

/// `count` pairwise disjoint members of one family (indices ascending), or empty.
std::vector<int> disjoint_members(const std::vector<Mask>& family, int count, BudgetMeter& meter);

/// Minimum vertex set meeting every member of `family`.
Mask min_hitting_set(const std::vector<Mask>& family, BudgetMeter& meter);

template <class F>
void for_each_path_mask(const BitGraph& g, const Domain& domain, int source, BudgetMeter& meter, F&& f) {
  const int d = domain.size();
  const std::vector<Local> adj = domain.local_adjacency(g);
  std::vector<Local> reach(std::size_t{1} << d, 0);
  const int s = domain.index_of(source);
  reach[Local{1} << s] = Local{1} << s;
  for (Local mask = Local{1} << s; mask < (Local{1} << d); ++mask) {
    const Local ends = reach[mask];
    if (ends == 0) continue;
    meter.tick();
    f(mask, ends);
    for (Local e = ends; e != 0; e &= e - 1) {
      const int v = std::countr_zero(e);
      for (Local out = adj[static_cast<std::size_t>(v)] & ~mask; out != 0; out &= out - 1) {
        const int w = std::countr_zero(out);
        reach[mask | (Local{1} << w)] |= Local{1} << w;
      }
    }
  }
}

}  // namespace oddpack::detail
