// oddpack command line tool. Vertex ids and pair indices are 1-based here.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "oddpack/covers.hpp"
#include "oddpack/dimacs.hpp"
#include "oddpack/errors.hpp"
#include "oddpack/generators.hpp"
#include "oddpack/json_io.hpp"
#include "oddpack/linkage.hpp"
#include "oddpack/packing.hpp"
#include "oddpack/partitions.hpp"
#include "oddpack/pbm.hpp"
#include "oddpack/sweep.hpp"

using namespace oddpack;

namespace {

enum Exit { kFound = 0, kAbsent = 1, kInputError = 2, kBudget = 3 };

struct Globals {
  std::string input;
  bool json = false;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> budget_nodes;
  std::optional<double> budget_seconds;
  int workers = 1;
  std::string terminals;
  std::string pairs;
  int k = 1;
};

Globals opt;

Budget budget() {
  Budget b;
  if (opt.budget_nodes) b.max_nodes = *opt.budget_nodes;
  if (opt.budget_seconds) b.max_seconds = *opt.budget_seconds;
  return b;
}

Graph load_graph() {
  if (opt.input.empty() || opt.input == "-") return read_dimacs(std::cin);
  return read_dimacs_file(opt.input);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw InputError("not an integer: '" + s + "'");
}

Vertex parse_vertex(const Graph& g, const std::string& s) {
  const int v = parse_int(s) - 1;
  if (!g.has_vertex(v)) throw InputError("vertex " + s + " out of range");
  return v;
}

VertexSet parse_set(const Graph& g, const std::string& s) {
  std::vector<Vertex> out;
  for (const auto& item : split(s, ',')) out.push_back(parse_vertex(g, item));
  return VertexSet(std::move(out));
}

VertexSet terminals_or_all(const Graph& g) {
  if (!opt.terminals.empty()) return parse_set(g, opt.terminals);
  std::vector<Vertex> all(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) all[static_cast<std::size_t>(v)] = v;
  return VertexSet(std::move(all));
}

// "s1,t1;s2,t2"
std::vector<TerminalPair> parse_pairs(const Graph& g, const std::string& s) {
  std::vector<TerminalPair> out;
  for (const auto& item : split(s, ';')) {
    const auto ends = split(item, ',');
    if (ends.size() != 2) throw InputError("pair '" + item + "' needs two vertices");
    out.push_back({parse_vertex(g, ends[0]), parse_vertex(g, ends[1])});
  }
  if (out.empty()) throw InputError("--pairs is empty");
  return out;
}

// Parity demands parallel to the pairs: odd, even or any.
TerminalSystem parse_system(const Graph& g, const std::string& parities) {
  TerminalSystem ts = TerminalSystem::plain(parse_pairs(g, opt.pairs));
  const auto items = split(parities, ',');
  if (!items.empty() && static_cast<int>(items.size()) != ts.k()) {
    throw InputError("--parities needs one entry per pair");
  }
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i] == "any") continue;
    if (items[i] != "odd" && items[i] != "even") throw InputError("parity must be odd, even or any");
    ts.parity_set.push_back(static_cast<int>(i));
    ts.demanded.push_back(items[i] == "odd" ? Parity::odd : Parity::even);
  }
  validate_terminal_system(g, ts);
  return ts;
}

void print_set(const char* label, const VertexSet& s) {
  std::cout << label << " (" << s.size() << "):";
  for (Vertex v : s) std::cout << ' ' << v + 1;
  std::cout << '\n';
}

void print_seq(const std::vector<Vertex>& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) std::cout << (i ? " " : "") << seq[i] + 1;
  std::cout << '\n';
}

void print_packing(const CyclePacking& p) {
  std::cout << "packing of " << p.size() << " odd cycles\n";
  for (const Cycle& c : p.cycles) print_seq(c.vertices);
}

void print_matching(const Matching& m) {
  std::cout << "matching of size " << m.size() << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::cout << m.edges[i].u + 1 << ' ' << m.edges[i].v + 1;
    if (i < m.labels.size()) std::cout << "  (pair " << m.labels[i] + 1 << ')';
    std::cout << '\n';
  }
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_occ() {
  const Graph g = load_graph();
  const OddCycleCover c = min_odd_cycle_cover(g, budget());
  if (opt.json) {
    emit({{"size", c.members.size()},
          {"members", to_json(c.members, 1)},
          {"verified", is_odd_cycle_cover(g, c.members)}});
  } else {
    print_set("odd cycle cover", c.members);
  }
  return kFound;
}

int cmd_s_occ() {
  const Graph g = load_graph();
  const VertexSet s = terminals_or_all(g);
  const OddSCycleCover c = min_odd_s_cycle_cover(g, s, budget());
  if (opt.json) {
    emit({{"size", c.members.size()},
          {"members", to_json(c.members, 1)},
          {"verified", verify_cover(g, s, c.members)},
          {"terminals", to_json(s, 1)}});
  } else {
    print_set("odd S-cycle cover", c.members);
  }
  return kFound;
}

int cmd_nice_partition(bool all, const std::string& cover) {
  const Graph g = load_graph();
  std::vector<NicePartition> parts;
  if (!cover.empty()) {
    parts = nice_partitions_induced_by(g, OddCycleCover{parse_set(g, cover), true});
    if (!all) parts.resize(std::min<std::size_t>(parts.size(), 1));
    std::string why;
    for (const auto& np : parts) {
      if (!validate_nice_partition(g, np, budget(), &why)) throw InputError("not a minimum odd cycle cover: " + why);
    }
  } else if (all) {
    parts = all_nice_partitions(g, budget());
  } else {
    parts.push_back(canonical_nice_partition(g, budget()));
  }
  if (opt.json) {
    json out = json::array();
    for (const auto& np : parts) {
      json j = to_json(np, 1);
      j["tauWithin"] = tau(within_graph(g, np.partition), budget());
      out.push_back(j);
    }
    emit(all ? out : out.at(0));
    return kFound;
  }
  for (const auto& np : parts) {
    print_set("cover", np.inducing_cover.members);
    print_set("A", np.partition.part_a);
    print_set("B", np.partition.part_b);
    std::cout << "tau(G_AB) = " << tau(within_graph(g, np.partition), budget()) << '\n';
  }
  return kFound;
}

int cmd_tau() {
  const Graph g = load_graph();
  const VertexSet c = min_vertex_cover(g, budget());
  if (opt.json) emit({{"tau", c.size()}, {"cover", to_json(c, 1)}});
  else print_set("vertex cover", c);
  return kFound;
}

int cmd_tau_critical() {
  const Graph g = load_graph();
  const bool critical = is_tau_critical(g, budget());
  const int t = tau(g, budget());
  if (opt.json) emit({{"critical", critical}, {"tau", t}, {"n", g.order()}});
  else std::cout << (critical ? "tau-critical" : "not tau-critical") << " (tau = " << t << ")\n";
  return critical ? kFound : kAbsent;
}

int cmd_pbm(const std::string& method, const std::string& parity_set) {
  const Graph g = load_graph();
  const auto pairs = parse_pairs(g, opt.pairs);
  std::optional<Matching> m;
  PbmTrace trace;
  if (method == "extract4k") {
    m = extract_pbm_4k(g, pairs, budget(), &trace);
  } else if (method == "independent") {
    m = extract_pbm_independent(g, pairs, budget(), &trace);
  } else if (method == "brute") {
    TerminalSystem ts = TerminalSystem::plain(pairs);
    if (parity_set.empty()) {
      for (int i = 0; i < ts.k(); ++i) ts.parity_set.push_back(i);
    } else {
      for (const auto& item : split(parity_set, ',')) ts.parity_set.push_back(parse_int(item) - 1);
    }
    ts.demanded.assign(ts.parity_set.size(), Parity::odd);
    validate_terminal_system(g, ts);
    const NicePartition np = canonical_nice_partition(g, budget());
    m = brute_force_pbm(g, np.partition, ts, budget());
    if (opt.json) {
      json out = {{"nicePartition", to_json(np, 1)}, {"found", m.has_value()}};
      if (m) out["matching"] = to_json(*m, 1);
      emit(out);
    } else {
      print_set("A", np.partition.part_a);
      print_set("B", np.partition.part_b);
      if (m) print_matching(*m);
      else std::cout << "no parity-breaking matching\n";
    }
    return m ? kFound : kAbsent;
  } else {
    throw InputError("--method must be extract4k, independent or brute");
  }
  if (opt.json) {
    emit({{"matching", to_json(*m, 1)}, {"deadBranchActivations", trace.dead_branch_activations}});
  } else {
    print_matching(*m);
  }
  return kFound;
}

int cmd_linkage(bool parity, const std::string& parities) {
  const Graph g = load_graph();
  const TerminalSystem ts = parity ? parse_system(g, parities) : parse_system(g, "");
  const auto l = parity ? find_parity_linkage(g, ts, budget()) : find_linkage(g, ts, budget());
  if (opt.json) {
    json out = {{"found", l.has_value()}};
    if (l) out["linkage"] = to_json(*l, 1);
    emit(out);
  } else if (l) {
    const auto par = l->parities();
    for (std::size_t i = 0; i < l->paths.size(); ++i) {
      std::cout << "pair " << i + 1 << " (" << to_string(par[i]) << "): ";
      print_seq(l->paths[i]);
    }
  } else {
    std::cout << "no linkage\n";
  }
  return l ? kFound : kAbsent;
}

int cmd_odd_z_paths(int ell) {
  const Graph g = load_graph();
  const VertexSet z = terminals_or_all(g);
  const ZPathCertificate c = odd_z_path_dichotomy(g, z, ell, budget());
  if (opt.json) {
    emit(to_json(c, 1));
  } else if (c.packed()) {
    std::cout << c.packing.size() << " disjoint odd Z-paths\n";
    for (const ZPath& p : c.packing) print_seq(p.vertices);
  } else {
    print_set("hitting set", *c.hitting_set);
    if (c.violation) std::cout << "hitting set exceeds 2*ell-2\n";
  }
  return kFound;
}

int cmd_pack() {
  const Graph g = load_graph();
  const VertexSet s = terminals_or_all(g);
  const auto p = pack_odd_s_cycles(g, s, opt.k, budget());
  if (opt.json) {
    json out = {{"found", p.has_value()}, {"k", opt.k}};
    if (p) out["packing"] = to_json(*p, 1);
    emit(out);
  } else if (p) {
    print_packing(*p);
  } else {
    std::cout << "no " << opt.k << " disjoint odd S-cycles\n";
  }
  return p ? kFound : kAbsent;
}

int cmd_dichotomy(bool bipartite) {
  const Graph g = load_graph();
  const VertexSet s = terminals_or_all(g);
  const DichotomyResult r = bipartite ? dichotomy_bipartite_cover(g, s, opt.k, budget())
                                      : dichotomy_s_cycles(g, s, opt.k, budget());
  if (opt.json) {
    emit(to_json(r, 1));
    return kFound;
  }
  std::cout << "connectivity " << r.connectivity << '\n';
  if (r.packing) print_packing(*r.packing);
  if (r.cover) print_set(bipartite ? "bipartite-making cover" : "odd S-cycle cover", *r.cover);
  if (r.s_cycle_cover) print_set("odd S-cycle cover", *r.s_cycle_cover);
  std::cout << "bound " << r.bound << (r.bound_met ? " met" : " not met") << '\n';
  if (bipartite) std::cout << "tau_k " << r.tau_k << ", relaxed bound " << r.relaxed_bound << '\n';
  return kFound;
}

int cmd_triangles(bool matching_form) {
  const Graph g = load_graph();
  if (matching_form) {
    const MatchingFormResult r = dichotomy_matching_form(g, opt.k, budget());
    if (opt.json) {
      emit(to_json(r, 1));
    } else {
      std::cout << "branch " << to_string(r.branch) << '\n';
      if (r.independent_set) print_set("independent set", *r.independent_set);
      if (r.packing) print_packing(*r.packing);
      if (r.partition) {
        print_set("A", r.partition->partition.part_a);
        print_set("B", r.partition->partition.part_b);
        std::cout << "G_AB has a matching of size k: " << (r.within_has_matching ? "yes" : "no") << '\n';
      }
    }
    return r.packing ? kFound : kAbsent;
  }
  const auto p = greedy_triangle_packing(g, opt.k);
  if (opt.json) {
    json out = {{"found", p.has_value()}};
    if (p) out["packing"] = to_json(*p, 1);
    emit(out);
  } else if (p) {
    print_packing(*p);
  } else {
    std::cout << "greedy found fewer than " << opt.k << " triangles\n";
  }
  return p ? kFound : kAbsent;
}

int cmd_gen(const std::string& family, int n, double p, int tau_value, int side, const std::string& path) {
  InstanceSpec spec;
  spec.family = family_from_string(family);
  spec.n = n;
  spec.p = p;
  spec.seed = opt.seed;
  spec.k = opt.k;
  spec.tau = tau_value;
  spec.side = side;
  spec.path = path;
  std::optional<VertexSet> s;
  std::optional<TerminalSystem> ts;
  Graph g(0);
  if (spec.family == Family::non_parity_linked) {
    auto gen = gen_non_parity_linked(spec.k, side);
    g = gen.graph;
    ts = gen.system;
  } else if (spec.family == Family::tight_cover) {
    auto gen = gen_tight_cover(spec.k, tau_value, side);
    g = gen.graph;
    s = gen.s;
  } else {
    g = generate(spec);
  }
  if (opt.json) {
    json out = {{"family", to_string(spec.family)}, {"graph", to_json(g, 1)}};
    if (s) out["terminals"] = to_json(*s, 1);
    if (ts) out["system"] = to_json(*ts, 1);
    emit(out);
    return kFound;
  }
  if (s) {
    std::cout << "c terminals";
    for (Vertex v : *s) std::cout << ' ' << v + 1;
    std::cout << '\n';
  }
  if (ts) {
    std::cout << "c pairs";
    for (const auto& pr : ts->pairs) std::cout << ' ' << pr.s + 1 << ',' << pr.t + 1;
    std::cout << '\n';
  }
  write_dimacs(std::cout, g);
  return kFound;
}

int cmd_sweep(const std::string& suite, const std::string& config_path, bool list, bool summary_only,
              const std::vector<std::string>& overrides) {
  if (list) {
    for (const auto& name : sweep_suites()) std::cout << name << '\n';
    return kFound;
  }
  if (suite.empty()) throw InputError("sweep needs a suite name (see --list)");
  SweepConfig cfg = config_path.empty() ? SweepConfig::from_environment() : SweepConfig::load(config_path);
  for (const auto& kv : overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw InputError("--set expects key=value");
    cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (opt.budget_nodes) cfg.set("budget_nodes", std::to_string(*opt.budget_nodes));
  if (opt.budget_seconds) cfg.set("budget_seconds", std::to_string(*opt.budget_seconds));
  if (opt.workers > 1) cfg.set("workers", std::to_string(opt.workers));
  const SweepReport report = run_sweep(suite, cfg);
  write_report(std::cout, report, !summary_only);
  return report.clean() ? kFound : kAbsent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Odd cycle packing and covering toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--input,-i", opt.input, "DIMACS graph file (default: stdin)");
  app.add_flag("--json", opt.json, "JSON output");
  app.add_option("--seed", opt.seed, "Seed for random families");
  app.add_option("--budget-nodes", opt.budget_nodes, "Search node cap");
  app.add_option("--budget-seconds", opt.budget_seconds, "Wall-clock cap per search");
  app.add_option("--workers", opt.workers, "Sweep worker threads")->check(CLI::PositiveNumber);
  app.add_option("--terminals,-S", opt.terminals, "Terminal vertex set, e.g. 1,4,7");
  app.add_option("--pairs", opt.pairs, "Terminal pairs, e.g. \"1,2;3,4\"");
  app.add_option("-k", opt.k, "Number of cycles, pairs or triangles")->check(CLI::NonNegativeNumber);

  int result = kFound;
  auto* occ = app.add_subcommand("occ", "Minimum odd cycle cover");
  occ->callback([&] { result = cmd_occ(); });
  auto* socc = app.add_subcommand("s-occ", "Minimum odd S-cycle cover");
  socc->callback([&] { result = cmd_s_occ(); });

  bool all_parts = false;
  std::string cover;
  auto* nice = app.add_subcommand("nice-partition", "Nice partition induced by a minimum odd cycle cover");
  nice->add_flag("--all", all_parts, "List every nice partition");
  nice->add_option("--cover", cover, "Use this minimum odd cycle cover");
  nice->callback([&] { result = cmd_nice_partition(all_parts, cover); });

  app.add_subcommand("tau", "Vertex cover number")->callback([&] { result = cmd_tau(); });
  app.add_subcommand("tau-critical", "Is every vertex and edge deletion tau-lowering")->callback([&] {
    result = cmd_tau_critical();
  });

  std::string method = "extract4k";
  std::string parity_set;
  auto* pbm = app.add_subcommand("pbm", "Parity-breaking matching");
  pbm->add_option("--method", method, "extract4k, independent or brute")
      ->check(CLI::IsMember({"extract4k", "independent", "brute"}));
  pbm->add_option("--parity-set", parity_set, "Pair indices that need a matching edge (brute only)");
  pbm->callback([&] { result = cmd_pbm(method, parity_set); });

  app.add_subcommand("linkage", "Disjoint paths for the terminal pairs")->callback([&] {
    result = cmd_linkage(false, "");
  });
  std::string parities;
  auto* plink = app.add_subcommand("parity-linkage", "Disjoint paths with prescribed parities");
  plink->add_option("--parities", parities, "odd/even/any per pair, e.g. odd,even");
  plink->callback([&] { result = cmd_linkage(true, parities); });

  int ell = 1;
  auto* zp = app.add_subcommand("odd-z-paths", "Disjoint odd Z-paths or a small hitting set");
  zp->add_option("--ell", ell, "Number of paths")->check(CLI::PositiveNumber);
  zp->callback([&] { result = cmd_odd_z_paths(ell); });

  app.add_subcommand("pack", "k disjoint odd S-cycles")->callback([&] { result = cmd_pack(); });
  app.add_subcommand("dichotomy", "Odd S-cycle packing or cover")->callback([&] { result = cmd_dichotomy(false); });
  app.add_subcommand("dichotomy-bipartite", "Odd S-cycle packing or bipartite-making cover")->callback([&] {
    result = cmd_dichotomy(true);
  });

  bool matching_form = false;
  auto* tri = app.add_subcommand("triangles", "Greedy disjoint triangles");
  tri->add_flag("--matching-form", matching_form, "Run the independent set / triangles / matching dichotomy");
  tri->callback([&] { result = cmd_triangles(matching_form); });

  std::string family = "randomGnp";
  std::string path;
  int n = 0;
  double p = 0.5;
  int tau_value = 1;
  int side = 0;
  auto* gen = app.add_subcommand("gen", "Generate an instance (DIMACS on stdout)");
  gen->add_option("--family", family, "nonParityLinked, tightCover, randomGnp, randomDense, file");
  gen->add_option("--n", n, "Order for random families");
  gen->add_option("--p", p, "Edge probability");
  gen->add_option("--tau", tau_value, "tau for tightCover");
  gen->add_option("--side", side, "Side size for the constructions");
  gen->add_option("--path", path, "File for the file family");
  gen->callback([&] { result = cmd_gen(family, n, p, tau_value, side, path); });

  std::string suite;
  std::string config;
  bool list = false;
  bool summary_only = false;
  std::vector<std::string> overrides;
  auto* sweep = app.add_subcommand("sweep", "Run a property sweep, JSON lines on stdout");
  sweep->add_option("suite", suite, "Suite name");
  sweep->add_option("--config", config, std::string("Config file (default: $") + kSweepConfigEnv + ")");
  sweep->add_option("--set", overrides, "Override a config key, key=value");
  sweep->add_flag("--list", list, "List suites");
  sweep->add_flag("--summary", summary_only, "Print only the summary object");
  sweep->callback([&] { result = cmd_sweep(suite, config, list, summary_only, overrides); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kFound : kInputError;
  } catch (const ResourceLimitError& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return kBudget;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition not met: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return result;
}
