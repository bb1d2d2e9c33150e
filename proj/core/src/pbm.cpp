#include "oddpack/pbm.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "bitgraph.hpp"
#include "oddpack/errors.hpp"
#include "vertex_cover.hpp"

namespace oddpack {

using detail::bit;
using detail::BitGraph;
using detail::Mask;

VertexSet TerminalSystem::terminals() const {
  std::vector<Vertex> out;
  for (const auto& p : pairs) {
    out.push_back(p.s);
    out.push_back(p.t);
  }
  return VertexSet(std::move(out));
}

std::optional<Parity> TerminalSystem::demand(int index) const {
  for (std::size_t i = 0; i < parity_set.size(); ++i) {
    if (parity_set[i] == index) return demanded.at(i);
  }
  return std::nullopt;
}

TerminalSystem TerminalSystem::all_demanded(std::vector<TerminalPair> pairs, Parity parity) {
  TerminalSystem ts;
  ts.pairs = std::move(pairs);
  for (int i = 0; i < ts.k(); ++i) {
    ts.parity_set.push_back(i);
    ts.demanded.push_back(parity);
  }
  return ts;
}

TerminalSystem TerminalSystem::plain(std::vector<TerminalPair> pairs) {
  TerminalSystem ts;
  ts.pairs = std::move(pairs);
  return ts;
}

void validate_terminal_system(const Graph& g, const TerminalSystem& ts) {
  std::vector<Vertex> seen;
  for (const auto& p : ts.pairs) {
    if (!g.has_vertex(p.s) || !g.has_vertex(p.t)) throw InputError("terminal outside the vertex range");
    seen.push_back(p.s);
    seen.push_back(p.t);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) throw InputError("terminals must be distinct");
  if (ts.demanded.size() != ts.parity_set.size()) throw InputError("every index of the parity set needs a demand");
  for (std::size_t i = 0; i < ts.parity_set.size(); ++i) {
    if (ts.parity_set[i] < 0 || ts.parity_set[i] >= ts.k()) throw InputError("parity index out of range");
    if (i > 0 && ts.parity_set[i] <= ts.parity_set[i - 1]) throw InputError("parity set must be sorted and distinct");
  }
}

namespace {

bool avoids_others(const Edge& e, int label, const std::vector<TerminalPair>& pairs) {
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    if (static_cast<int>(j) == label) continue;
    if (e.touches(pairs[j].s) || e.touches(pairs[j].t)) return false;
  }
  return true;
}

// One index of an avoiding matching still to be placed.
struct Slot {
  int label;
  Mask forbidden;
};

bool search_slots(const BitGraph& h, Mask free, const std::vector<Slot>& slots, std::size_t pos,
                  std::vector<Edge>& chosen, BudgetMeter& meter) {
  meter.tick();
  if (pos == slots.size()) return true;
  const Mask usable = free & ~slots[pos].forbidden;
  bool found = false;
  detail::for_each_bit(usable, [&](int u) {
    if (found) return;
    detail::for_each_bit(h.adj[static_cast<std::size_t>(u)] & usable & ~detail::full_mask(u + 1), [&](int v) {
      if (found) return;
      chosen.emplace_back(u, v);
      if (search_slots(h, free & ~(bit(u) | bit(v)), slots, pos + 1, chosen, meter)) {
        found = true;
        return;
      }
      chosen.pop_back();
    });
  });
  return found;
}

Matching labelled(std::vector<std::pair<int, Edge>> items) {
  std::sort(items.begin(), items.end());
  Matching m;
  for (const auto& [label, e] : items) {
    m.edges.push_back(e);
    m.labels.push_back(label);
  }
  return m;
}

struct Active {
  int label;
  int x;
  int y;
};

Mask terminal_mask(const std::vector<Active>& act) {
  Mask z = 0;
  for (const auto& a : act) z |= bit(a.x) | bit(a.y);
  return z;
}

std::vector<Active> without(std::vector<Active> act, std::size_t i) {
  act.erase(act.begin() + static_cast<std::ptrdiff_t>(i));
  return act;
}

std::string edge_text(int u, int v) { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }

void log_step(PbmTrace* trace, std::string text) {
  if (trace != nullptr) trace->steps.push_back(std::move(text));
}

std::vector<TerminalPair> validated_pairs(const Graph& h, const std::vector<TerminalPair>& pairs) {
  validate_terminal_system(h, TerminalSystem::plain(pairs));
  return pairs;
}

std::vector<Active> initial_active(const std::vector<TerminalPair>& pairs) {
  std::vector<Active> act;
  for (std::size_t i = 0; i < pairs.size(); ++i) act.push_back({static_cast<int>(i), pairs[i].s, pairs[i].t});
  return act;
}

class IndependentExtractor {
 public:
  IndependentExtractor(BudgetMeter& meter, PbmTrace* trace) : meter_(meter), trace_(trace) {}

  void solve(const BitGraph& h, Mask alive, const std::vector<Active>& act) {
    meter_.tick();
    const int k = static_cast<int>(act.size());
    if (k == 0) return;
    if (k == 1) {
      const Edge e = detail::first_edge(h, alive);
      if (e.u < 0) return dead_end(h, alive, act, "no edge left for the last pair");
      take(act[0].label, e.u, e.v, "base");
      return;
    }
    const Mask z = terminal_mask(act);
    if (!h.has_edge(alive & ~z)) return konig_case(h, alive, act);

    for (std::size_t i = 0; i < act.size(); ++i) {
      for (int side = 0; side < 2; ++side) {
        const int iso = side == 0 ? act[i].x : act[i].y;
        const int partner = side == 0 ? act[i].y : act[i].x;
        if (h.neighbors(iso, alive) != 0) continue;
        const Mask nb = h.neighbors(partner, alive);
        if (nb != 0) {
          const int u = detail::lowest(nb);
          take(act[i].label, u, partner, "isolated terminal, partner edge");
          return solve(h, alive & ~(bit(u) | bit(iso) | bit(partner)), without(act, i));
        }
        const Edge e = detail::first_edge(h, alive & ~z);
        take(act[i].label, e.u, e.v, "isolated pair, edge outside Z");
        return solve(h, alive & ~(bit(e.u) | bit(e.v) | bit(iso) | bit(partner)), without(act, i));
      }
    }

    const int t = detail::vc_number(h, alive, meter_);
    if (t >= 2 * k) {
      const Active& last = act.back();
      const int w = detail::lowest(h.neighbors(last.x, alive));
      take(last.label, last.x, w, "tau >= 2k");
      return solve(h, alive & ~(bit(last.x) | bit(last.y) | bit(w)), without(act, act.size() - 1));
    }
    if (t < 2 * k - 1) return dead_end(h, alive, act, "tau below 2k-1");

    Mask core = 0;
    detail::for_each_bit(alive, [&](int v) {
      if (h.neighbors(v, alive) != 0) core |= bit(v);
    });
    std::optional<Edge> loose_edge;
    detail::for_each_bit(core, [&](int u) {
      if (loose_edge) return;
      detail::for_each_bit(h.neighbors(u, core) & ~detail::full_mask(u + 1), [&](int v) {
        if (loose_edge) return;
        BitGraph smaller = h;
        smaller.remove_edge(u, v);
        if (!detail::vc_within(smaller, core, t - 1, meter_)) loose_edge = Edge(u, v);
      });
    });
    if (loose_edge) {
      BitGraph smaller = h;
      smaller.remove_edge(loose_edge->u, loose_edge->v);
      log_step(trace_, "drop edge " + edge_text(loose_edge->u, loose_edge->v));
      return solve(smaller, core, act);
    }
    const Mask others = core & ~z;
    for (Mask rest = others; rest != 0; rest &= rest - 1) {
      const int r = detail::lowest(rest);
      if (!detail::vc_within(h, core & ~bit(r), t - 1, meter_)) {
        log_step(trace_, "drop vertex " + std::to_string(r));
        return solve(h, core & ~bit(r), act);
      }
    }
    for (std::size_t i = 0; i < act.size(); ++i) {
      for (int side = 0; side < 2; ++side) {
        const int dropped = side == 0 ? act[i].x : act[i].y;
        const int keep = side == 0 ? act[i].y : act[i].x;
        if (detail::vc_within(h, core & ~bit(dropped), t - 1, meter_)) continue;
        const int r = detail::lowest(h.neighbors(keep, core));
        take(act[i].label, keep, r, "terminal deletion keeps tau");
        return solve(h, core & ~(bit(dropped) | bit(keep) | bit(r)), without(act, i));
      }
    }
    dead_end(h, core, act, "tau-critical residue");
  }

  std::vector<std::pair<int, Edge>> items;

 private:
  void take(int label, int u, int v, const char* why) {
    items.emplace_back(label, Edge(u, v));
    log_step(trace_, std::string(why) + ": m_" + std::to_string(label) + " = " + edge_text(std::min(u, v), std::max(u, v)));
  }

  void konig_case(const BitGraph& h, Mask alive, const std::vector<Active>& act) {
    const Matching n = konig_matching(h.to_graph(alive));
    std::map<int, Edge> by_pair;
    for (const Edge& e : n.edges) {
      for (std::size_t i = 0; i < act.size(); ++i) {
        const bool at_x = e.touches(act[i].x);
        const bool at_y = e.touches(act[i].y);
        if (!at_x && !at_y) continue;
        // Keep the edge at x_i when both terminals of the pair are matched.
        if (at_x || !by_pair.contains(act[i].label)) by_pair[act[i].label] = e;
      }
    }
    if (by_pair.size() != act.size()) return dead_end(h, alive, act, "Konig matching too small");
    for (const auto& [label, e] : by_pair) take(label, e.u, e.v, "Konig");
  }

  void dead_end(const BitGraph& h, Mask alive, const std::vector<Active>& act, const std::string& why) {
    std::string record = why + ": vertices";
    detail::for_each_bit(alive, [&](int v) { record += " " + std::to_string(v); });
    record += "; pairs";
    for (const auto& a : act) record += " " + std::to_string(a.label) + ":" + edge_text(a.x, a.y);
    if (trace_ != nullptr) {
      ++trace_->dead_branch_activations;
      trace_->dead_branch_log.push_back(record);
    }
    const Mask z = terminal_mask(act);
    std::vector<Slot> slots;
    for (const auto& a : act) slots.push_back({a.label, z & ~(bit(a.x) | bit(a.y))});
    std::vector<Edge> chosen;
    if (!search_slots(h, alive, slots, 0, chosen, meter_)) {
      throw PreconditionError("no avoiding matching exists (" + record + ")");
    }
    for (std::size_t i = 0; i < slots.size(); ++i) take(slots[i].label, chosen[i].u, chosen[i].v, "exhaustive");
  }

  BudgetMeter& meter_;
  PbmTrace* trace_;
};

}  // namespace

bool is_avoiding_matching(const Matching& m, const Graph& h, const std::vector<TerminalPair>& pairs) {
  if (m.labels.size() != m.edges.size() || m.size() != pairs.size()) return false;
  if (!is_matching_of(h, m)) return false;
  std::vector<int> labels = m.labels;
  std::sort(labels.begin(), labels.end());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] != static_cast<int>(i)) return false;
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!avoids_others(m.edges[i], m.labels[i], pairs)) return false;
  }
  return true;
}

bool is_parity_breaking(const Matching& m, const Graph& g, const Partition& p, const TerminalSystem& ts) {
  if (m.labels.size() != m.edges.size() || m.size() != ts.parity_set.size()) return false;
  std::vector<int> labels = m.labels;
  std::sort(labels.begin(), labels.end());
  if (labels != ts.parity_set) return false;
  if (!is_matching_of(within_graph(g, p), m)) return false;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!avoids_others(m.edges[i], m.labels[i], ts.pairs)) return false;
  }
  return true;
}

Matching restrict_labels(const Matching& m, const std::vector<int>& labels) {
  std::vector<std::pair<int, Edge>> items;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (std::find(labels.begin(), labels.end(), m.labels.at(i)) != labels.end()) {
      items.emplace_back(m.labels[i], m.edges[i]);
    }
  }
  return labelled(std::move(items));
}

Matching extract_pbm_4k(const Graph& h, const std::vector<TerminalPair>& pairs, const Budget& budget,
                        PbmTrace* trace) {
  validated_pairs(h, pairs);
  const int k = static_cast<int>(pairs.size());
  if (k == 0) return {};
  const BitGraph bg(h);
  BudgetMeter meter(budget, "extract_pbm_4k");
  Mask alive = bg.all();
  if (detail::vc_within(bg, alive, 4 * k - 4, meter)) {
    throw PreconditionError("tau(h) < 4k-3 for k = " + std::to_string(k));
  }
  std::vector<Active> act = initial_active(pairs);
  std::vector<std::pair<int, Edge>> items;
  while (act.size() > 1) {
    const Mask y = detail::lex_min_vertex_cover(bg, alive, meter);
    const Mask spare = y & ~terminal_mask(act);
    if (spare == 0) throw PreconditionError("minimum vertex cover lies inside the terminals");
    const int r = detail::lowest(spare);
    const int r2 = detail::lowest(bg.neighbors(r, alive));
    std::size_t j = act.size() - 1;
    for (std::size_t i = 0; i < act.size(); ++i) {
      if (act[i].x == r2 || act[i].y == r2) j = i;
    }
    items.emplace_back(act[j].label, Edge(r, r2));
    log_step(trace, "r = " + std::to_string(r) + ", r' = " + std::to_string(r2) + ": m_" +
                        std::to_string(act[j].label) + " = " + edge_text(std::min(r, r2), std::max(r, r2)));
    alive &= ~(bit(act[j].x) | bit(act[j].y) | bit(r) | bit(r2));
    act = without(act, j);
  }
  const Edge e = detail::first_edge(bg, alive);
  if (e.u < 0) throw PreconditionError("no edge left for the base case");
  items.emplace_back(act[0].label, e);
  log_step(trace, "base: m_" + std::to_string(act[0].label) + " = " + edge_text(e.u, e.v));
  return labelled(std::move(items));
}

Matching extract_pbm_independent(const Graph& h, const std::vector<TerminalPair>& pairs, const Budget& budget,
                                 PbmTrace* trace) {
  validated_pairs(h, pairs);
  const int k = static_cast<int>(pairs.size());
  if (k == 0) return {};
  const BitGraph bg(h);
  const std::vector<Active> act = initial_active(pairs);
  const Mask z = terminal_mask(act);
  detail::for_each_bit(z, [&](int v) {
    if (bg.neighbors(v, z) != 0) throw PreconditionError("terminals are not independent");
  });
  BudgetMeter meter(budget, "extract_pbm_independent");
  if (detail::vc_within(bg, bg.all(), 2 * k - 2, meter)) {
    throw PreconditionError("tau(h) < 2k-1 for k = " + std::to_string(k));
  }
  IndependentExtractor run(meter, trace);
  run.solve(bg, bg.all(), act);
  return labelled(std::move(run.items));
}

std::optional<Matching> brute_force_avoiding_matching(const Graph& h, const std::vector<TerminalPair>& pairs,
                                                      const Budget& budget) {
  validated_pairs(h, pairs);
  const BitGraph bg(h);
  BudgetMeter meter(budget, "brute_force_avoiding_matching");
  const Mask z = terminal_mask(initial_active(pairs));
  std::vector<Slot> slots;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    slots.push_back({static_cast<int>(i), z & ~(bit(pairs[i].s) | bit(pairs[i].t))});
  }
  std::vector<Edge> chosen;
  if (!search_slots(bg, bg.all(), slots, 0, chosen, meter)) return std::nullopt;
  std::vector<std::pair<int, Edge>> items;
  for (std::size_t i = 0; i < slots.size(); ++i) items.emplace_back(slots[i].label, chosen[i]);
  return labelled(std::move(items));
}

std::optional<Matching> brute_force_pbm(const Graph& g, const Partition& p, const TerminalSystem& ts,
                                        const Budget& budget) {
  validate_terminal_system(g, ts);
  if (!is_partition_of(g, p)) throw InputError("not a partition of the graph");
  const BitGraph bg(within_graph(g, p));
  BudgetMeter meter(budget, "brute_force_pbm");
  const Mask z = detail::to_mask(ts.terminals());
  std::vector<Slot> slots;
  for (int i : ts.parity_set) {
    const auto& pair = ts.pairs[static_cast<std::size_t>(i)];
    slots.push_back({i, z & ~(bit(pair.s) | bit(pair.t))});
  }
  std::vector<Edge> chosen;
  if (!search_slots(bg, bg.all(), slots, 0, chosen, meter)) return std::nullopt;
  std::vector<std::pair<int, Edge>> items;
  for (std::size_t i = 0; i < slots.size(); ++i) items.emplace_back(slots[i].label, chosen[i]);
  return labelled(std::move(items));
}

EquivalenceReport nice_partition_equivalence(const Graph& g, const TerminalSystem& ts, const Budget& budget) {
  EquivalenceReport report;
  for (const NicePartition& np : all_nice_partitions(g, budget)) {
    ++report.partitions;
    if (brute_force_pbm(g, np.partition, ts, budget)) ++report.with_pbm;
  }
  report.uniform = report.with_pbm == 0 || report.with_pbm == report.partitions;
  return report;
}

}  // namespace oddpack
