#include "oddpack/json_io.hpp"

namespace oddpack {

json to_json(const Graph& g, int base) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u + base, e.v + base});
  return {{"n", g.order()}, {"m", g.size()}, {"edges", edges}};
}

json to_json(const VertexSet& s, int base) { return to_json(s.members(), base); }

json to_json(const std::vector<Vertex>& seq, int base) {
  json out = json::array();
  for (Vertex v : seq) out.push_back(v + base);
  return out;
}

json to_json(const Cycle& c, int base) { return {{"length", c.length()}, {"vertices", to_json(c.vertices, base)}}; }

json to_json(const Matching& m, int base) {
  json edges = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json e = {{"edge", {m.edges[i].u + base, m.edges[i].v + base}}};
    if (i < m.labels.size()) e["pair"] = m.labels[i] + base;
    edges.push_back(e);
  }
  return {{"size", m.size()}, {"edges", edges}};
}

json to_json(const Partition& p, int base) { return {{"A", to_json(p.part_a, base)}, {"B", to_json(p.part_b, base)}}; }

json to_json(const NicePartition& np, int base) {
  return {{"partition", to_json(np.partition, base)}, {"cover", to_json(np.inducing_cover.members, base)}};
}

json to_json(const Linkage& l, int base) {
  json paths = json::array();
  const auto parities = l.parities();
  for (std::size_t i = 0; i < l.paths.size(); ++i) {
    paths.push_back({{"pair", static_cast<int>(i) + base},
                     {"vertices", to_json(l.paths[i], base)},
                     {"length", l.paths[i].size() - 1},
                     {"parity", to_string(parities[i])}});
  }
  return {{"paths", paths}};
}

json to_json(const CyclePacking& p, int base) {
  json cycles = json::array();
  for (const Cycle& c : p.cycles) cycles.push_back(to_json(c, base));
  return {{"size", p.size()}, {"cycles", cycles}};
}

json to_json(const DichotomyResult& r, int base) {
  json out = {{"bound", r.bound}, {"boundMet", r.bound_met}, {"connectivity", r.connectivity}};
  if (r.packing) out["packing"] = to_json(*r.packing, base);
  if (r.cover) out["cover"] = {{"size", r.cover->size()}, {"members", to_json(*r.cover, base)}};
  if (r.s_cycle_cover) {
    out["sCycleCover"] = {{"size", r.s_cycle_cover->size()}, {"members", to_json(*r.s_cycle_cover, base)}};
  }
  if (r.tau_k >= 0) {
    out["tauK"] = r.tau_k;
    out["relaxedBound"] = r.relaxed_bound;
    out["relaxedMet"] = r.relaxed_met;
  }
  out["outcome"] = r.packing ? "packing" : "cover";
  return out;
}

json to_json(const ZPathCertificate& c, int base) {
  json out = {{"ell", c.ell}, {"violation", c.violation}};
  if (c.packed()) {
    json paths = json::array();
    for (const ZPath& p : c.packing) paths.push_back(to_json(p.vertices, base));
    out["outcome"] = "packing";
    out["paths"] = paths;
  } else {
    out["outcome"] = "hitting-set";
    out["hittingSet"] = to_json(c.hitting_set.value_or(VertexSet{}), base);
    out["bound"] = 2 * c.ell - 2;
  }
  return out;
}

json to_json(const MatchingFormResult& r, int base) {
  json out = {{"branch", to_string(r.branch)}};
  if (r.packing) out["packing"] = to_json(*r.packing, base);
  if (r.independent_set) out["independentSet"] = to_json(*r.independent_set, base);
  if (r.partition) {
    out["nicePartition"] = to_json(*r.partition, base);
    out["withinHasMatchingOfSizeK"] = r.within_has_matching;
  }
  return out;
}

json to_json(const TerminalSystem& ts, int base) {
  json pairs = json::array();
  for (const auto& p : ts.pairs) pairs.push_back({p.s + base, p.t + base});
  json demands = json::object();
  for (std::size_t i = 0; i < ts.parity_set.size(); ++i) {
    demands[std::to_string(ts.parity_set[i] + base)] = to_string(ts.demanded[i]);
  }
  return {{"pairs", pairs}, {"demands", demands}};
}

}  // namespace oddpack
