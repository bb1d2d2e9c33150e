#include "oddpack/enumerate.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <unordered_set>

#include "oddpack/errors.hpp"

namespace oddpack {

namespace {

__extension__ using U128 = unsigned __int128;

constexpr int kMax = kMaxEnumerationOrder;
using Labels = std::array<int, kMax>;

struct Small {
  int n = 0;
  std::array<std::uint16_t, kMax> adj{};
};

struct U128Hash {
  std::size_t operator()(U128 v) const noexcept {
    const auto lo = static_cast<std::uint64_t>(v);
    const auto hi = static_cast<std::uint64_t>(v >> 64);
    return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9E3779B97F4A7C15ULL));
  }
};

CanonicalCode split(U128 v) { return {static_cast<std::uint64_t>(v >> 64), static_cast<std::uint64_t>(v)}; }
U128 join(const CanonicalCode& c) { return (static_cast<U128>(c.hi) << 64) | c.lo; }

// Ranks the keys and writes dense cell ids; returns the number of cells.
int rerank(int n, const std::array<std::uint64_t, kMax>& key, Labels& cell) {
  std::array<std::uint64_t, kMax> sorted{};
  std::copy(key.begin(), key.begin() + n, sorted.begin());
  std::sort(sorted.begin(), sorted.begin() + n);
  const auto end = std::unique(sorted.begin(), sorted.begin() + n);
  for (int v = 0; v < n; ++v) cell[static_cast<std::size_t>(v)] = static_cast<int>(std::lower_bound(sorted.begin(), end, key[static_cast<std::size_t>(v)]) - sorted.begin());
  return static_cast<int>(end - sorted.begin());
}

class Canonizer {
 public:
  explicit Canonizer(const Small& g) : g_(g) {}

  U128 run() {
    Labels cell{};
    search(cell, 1);
    return best_;
  }

 private:
  // Splits cells by neighbour counts into every cell until stable.
  int refine(Labels& cell, int cells) const {
    const int n = g_.n;
    while (true) {
      std::array<std::uint64_t, kMax> key{};
      for (int v = 0; v < n; ++v) {
        std::array<std::uint8_t, kMax> count{};
        for (int w = 0; w < n; ++w) {
          if ((g_.adj[static_cast<std::size_t>(v)] >> w) & 1U) ++count[static_cast<std::size_t>(cell[static_cast<std::size_t>(w)])];
        }
        std::uint64_t k = static_cast<std::uint64_t>(cell[static_cast<std::size_t>(v)]) << 48;
        for (int c = 0; c < cells; ++c) k |= static_cast<std::uint64_t>(count[static_cast<std::size_t>(c)]) << (4 * (11 - c));
        key[static_cast<std::size_t>(v)] = k;
      }
      const int next = rerank(n, key, cell);
      if (next == cells) return cells;
      cells = next;
    }
  }

  bool twins(int u, int w) const {
    const auto bu = static_cast<std::uint16_t>(1U << u);
    const auto bw = static_cast<std::uint16_t>(1U << w);
    return (g_.adj[static_cast<std::size_t>(u)] & ~bw) == (g_.adj[static_cast<std::size_t>(w)] & ~bu);
  }

  void search(Labels cell, int cells) {
    const int n = g_.n;
    cells = refine(cell, cells);
    if (cells == n) {
      Labels order{};
      for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(cell[static_cast<std::size_t>(v)])] = v;
      U128 code = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          code = (code << 1) | ((g_.adj[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] >> order[static_cast<std::size_t>(j)]) & 1U);
        }
      }
      if (!have_ || code > best_) {
        best_ = code;
        have_ = true;
      }
      return;
    }
    std::array<int, kMax> size{};
    for (int v = 0; v < n; ++v) ++size[static_cast<std::size_t>(cell[static_cast<std::size_t>(v)])];
    int target = 0;
    while (size[static_cast<std::size_t>(target)] < 2) ++target;
    std::array<int, kMax> tried{};
    int tried_count = 0;
    for (int v = 0; v < n; ++v) {
      if (cell[static_cast<std::size_t>(v)] != target) continue;
      bool redundant = false;
      for (int t = 0; t < tried_count && !redundant; ++t) redundant = twins(tried[static_cast<std::size_t>(t)], v);
      if (redundant) continue;
      tried[static_cast<std::size_t>(tried_count++)] = v;
      std::array<std::uint64_t, kMax> key{};
      for (int w = 0; w < n; ++w) {
        const int c = cell[static_cast<std::size_t>(w)];
        key[static_cast<std::size_t>(w)] = static_cast<std::uint64_t>(2 * c + ((c == target && w != v) ? 1 : 0));
      }
      Labels next{};
      const int next_cells = rerank(n, key, next);
      search(next, next_cells);
    }
  }

  const Small& g_;
  U128 best_ = 0;
  bool have_ = false;
};

Small to_small(const Graph& g) {
  if (g.order() > kMax) throw InputError("canonical forms limited to " + std::to_string(kMax) + " vertices");
  Small s;
  s.n = g.order();
  for (const Edge& e : g.edges()) {
    s.adj[static_cast<std::size_t>(e.u)] |= static_cast<std::uint16_t>(1U << e.v);
    s.adj[static_cast<std::size_t>(e.v)] |= static_cast<std::uint16_t>(1U << e.u);
  }
  return s;
}

Small from_code(int n, U128 code) {
  Small s;
  s.n = n;
  int bits = n * (n - 1) / 2;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      --bits;
      if (((code >> bits) & 1U) != 0) {
        s.adj[static_cast<std::size_t>(i)] |= static_cast<std::uint16_t>(1U << j);
        s.adj[static_cast<std::size_t>(j)] |= static_cast<std::uint16_t>(1U << i);
      }
    }
  }
  return s;
}

// Component side masks of a bipartite small graph.
std::vector<std::pair<std::uint16_t, std::uint16_t>> sides(const Small& g) {
  std::vector<std::pair<std::uint16_t, std::uint16_t>> out;
  std::uint16_t seen = 0;
  for (int root = 0; root < g.n; ++root) {
    if ((seen >> root) & 1U) continue;
    std::uint16_t part[2] = {static_cast<std::uint16_t>(1U << root), 0};
    std::array<int, kMax> colour{};
    colour[static_cast<std::size_t>(root)] = 0;
    std::vector<int> stack{root};
    seen = static_cast<std::uint16_t>(seen | (1U << root));
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < g.n; ++w) {
        if (((g.adj[static_cast<std::size_t>(v)] >> w) & 1U) == 0 || ((seen >> w) & 1U) != 0) continue;
        seen = static_cast<std::uint16_t>(seen | (1U << w));
        colour[static_cast<std::size_t>(w)] = 1 - colour[static_cast<std::size_t>(v)];
        part[colour[static_cast<std::size_t>(w)]] = static_cast<std::uint16_t>(part[colour[static_cast<std::size_t>(w)]] | (1U << w));
        stack.push_back(w);
      }
    }
    out.emplace_back(part[0], part[1]);
  }
  return out;
}

}  // namespace

CanonicalCode canonical_code(const Graph& g) {
  const Small s = to_small(g);
  if (s.n <= 1) return {};
  return split(Canonizer(s).run());
}

Graph graph_from_code(int n, const CanonicalCode& code) {
  if (n < 0 || n > kMax) throw InputError("order outside the enumerator range");
  const Small s = from_code(n, join(code));
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if ((s.adj[static_cast<std::size_t>(i)] >> j) & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

std::vector<CanonicalCode> enumerate_codes(int n, GraphClass cls) {
  if (n < 0 || n > kMax) throw InputError("order outside the enumerator range");
  std::vector<U128> level{0};
  for (int m = 2; m <= n; ++m) {
    std::unordered_set<U128, U128Hash> next;
    const int prev = m - 1;
    for (U128 parent : level) {
      Small g = from_code(prev, parent);
      g.n = m;
      const auto parts = cls == GraphClass::bipartite ? sides(g) : decltype(sides(g)){};
      for (std::uint32_t nb = 0; nb < (1U << prev); ++nb) {
        if (cls == GraphClass::bipartite) {
          bool ok = true;
          for (const auto& [a, b] : parts) {
            const std::uint32_t hit = nb & (a | b);
            if ((hit & a) != 0 && (hit & b) != 0) ok = false;
          }
          if (!ok) continue;
        }
        Small h = g;
        h.adj[static_cast<std::size_t>(prev)] = static_cast<std::uint16_t>(nb);
        for (int v = 0; v < prev; ++v) {
          if ((nb >> v) & 1U) h.adj[static_cast<std::size_t>(v)] |= static_cast<std::uint16_t>(1U << prev);
        }
        next.insert(Canonizer(h).run());
      }
    }
    level.assign(next.begin(), next.end());
    std::sort(level.begin(), level.end());
  }
  std::vector<CanonicalCode> out;
  out.reserve(level.size());
  for (U128 c : level) out.push_back(split(c));
  return out;
}

void for_each_graph(int n, const std::function<void(const Graph&)>& visit, GraphClass cls) {
  for (const CanonicalCode& c : enumerate_codes(n, cls)) visit(graph_from_code(n, c));
}

std::vector<Graph> enumerate_graphs(int n, GraphClass cls) {
  std::vector<Graph> out;
  for_each_graph(n, [&](const Graph& g) { out.push_back(g); }, cls);
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (seen[static_cast<std::size_t>(w)] == 0) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.order();
}

}  // namespace oddpack
