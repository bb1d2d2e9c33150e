#include "oddpack/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "oddpack/covers.hpp"
#include "oddpack/enumerate.hpp"
#include "oddpack/errors.hpp"
#include "oddpack/generators.hpp"
#include "oddpack/json_io.hpp"
#include "oddpack/linkage.hpp"
#include "oddpack/packing.hpp"
#include "oddpack/partitions.hpp"
#include "oddpack/pbm.hpp"

namespace oddpack {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

SweepConfig SweepConfig::parse(std::istream& in) {
  SweepConfig cfg;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(number, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError(number, "empty key");
    cfg.values_[key] = value;
  }
  return cfg;
}

SweepConfig SweepConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open sweep config " + path.string());
  return parse(in);
}

SweepConfig SweepConfig::from_environment() {
  const char* path = std::getenv(kSweepConfigEnv);
  if (path == nullptr || *path == '\0') return {};
  return load(path);
}

bool SweepConfig::has(const std::string& suite, const std::string& key) const {
  return values_.contains(suite + "." + key) || values_.contains(key);
}

std::string SweepConfig::get(const std::string& suite, const std::string& key, const std::string& fallback) const {
  if (auto it = values_.find(suite + "." + key); it != values_.end()) return it->second;
  if (auto it = values_.find(key); it != values_.end()) return it->second;
  return fallback;
}

long long SweepConfig::get_int(const std::string& suite, const std::string& key, long long fallback) const {
  const std::string v = get(suite, key, "");
  if (v.empty()) return fallback;
  try {
    std::size_t used = 0;
    const long long out = std::stoll(v, &used);
    if (used != v.size()) throw InputError("");
    return out;
  } catch (const std::exception&) {
    throw InputError("config key '" + key + "' expects an integer, got '" + v + "'");
  }
}

double SweepConfig::get_double(const std::string& suite, const std::string& key, double fallback) const {
  const std::string v = get(suite, key, "");
  if (v.empty()) return fallback;
  try {
    std::size_t used = 0;
    const double out = std::stod(v, &used);
    if (used != v.size()) throw InputError("");
    return out;
  } catch (const std::exception&) {
    throw InputError("config key '" + key + "' expects a number, got '" + v + "'");
  }
}

Budget SweepConfig::budget(const std::string& suite) const {
  Budget b;
  b.max_nodes = static_cast<std::uint64_t>(get_int(suite, "budget_nodes", static_cast<long long>(b.max_nodes)));
  b.max_seconds = get_double(suite, "budget_seconds", b.max_seconds);
  return b;
}

int SweepConfig::workers(const std::string& suite) const {
  return static_cast<int>(std::max<long long>(1, get_int(suite, "workers", 1)));
}

nlohmann::json SweepReport::summary() const {
  return {{"summary", true},
          {"suite", suite},
          {"records", records.size()},
          {"counterexamples", counterexamples},
          {"budgetExhausted", budget_exhausted},
          {"seconds", seconds}};
}

void write_report(std::ostream& out, const SweepReport& report, bool include_records) {
  if (include_records) {
    for (const auto& r : report.records) out << r.dump() << '\n';
  }
  out << report.summary().dump() << '\n';
}

namespace {

// Per-chunk tallies; failures carry enough data to rebuild the instance.
struct Tally {
  std::map<std::string, long long> counts;
  std::vector<json> failures;
  std::vector<json> exhausted;

  void fail(json what) { failures.push_back(std::move(what)); }
  void bump(const std::string& key, long long by = 1) { counts[key] += by; }
};

using Task = std::function<json()>;

std::string hex_code(const CanonicalCode& c) {
  std::ostringstream os;
  os << std::hex << c.hi << ':' << c.lo;
  return os.str();
}

json graph_id(const Graph& g, const CanonicalCode& code) {
  return {{"n", g.order()}, {"code", hex_code(code)}};
}

json finish(json record, const Tally& t) {
  for (const auto& [k, v] : t.counts) record[k] = v;
  record["failures"] = t.failures;
  record["counterexamples"] = t.failures.size();
  record["budgetExhausted"] = t.exhausted.size();
  if (!t.exhausted.empty()) record["exhaustedInstances"] = t.exhausted;
  record["ok"] = t.failures.empty();
  return record;
}

using GraphCheck = std::function<void(const Graph&, const json& id, Tally&)>;

// Exhaustive graph suites split into chunks of canonical codes.
void add_graph_tasks(std::vector<Task>& tasks, int n, GraphClass cls, bool connected_only, const GraphCheck& check,
                     std::size_t chunk = 512) {
  auto codes = std::make_shared<std::vector<CanonicalCode>>(enumerate_codes(n, cls));
  for (std::size_t first = 0; first < codes->size(); first += chunk) {
    tasks.push_back([=]() {
      Tally t;
      const std::size_t last = std::min(codes->size(), first + chunk);
      for (std::size_t i = first; i < last; ++i) {
        const Graph g = graph_from_code(n, (*codes)[i]);
        if (connected_only && !is_connected(g)) continue;
        const json id = graph_id(g, (*codes)[i]);
        t.bump("graphs");
        try {
          check(g, id, t);
        } catch (const ResourceLimitError& e) {
          t.exhausted.push_back({{"instance", id}, {"error", e.what()}});
        } catch (const std::exception& e) {
          t.fail({{"instance", id}, {"error", e.what()}});
        }
      }
      return finish({{"n", n}, {"class", cls == GraphClass::bipartite ? "bipartite" : "all"}, {"first", first},
                     {"last", last}},
                    t);
    });
  }
}

// --- minimum odd cycle cover size equals tau of the within-graph.
std::vector<Task> observation2_tasks(const SweepConfig& cfg, const Budget& budget) {
  const std::string s = "observation2";
  const int max_n = static_cast<int>(cfg.get_int(s, "max_n", 8));
  const bool connected = cfg.get_int(s, "connected_only", 1) != 0;
  std::vector<Task> tasks;
  for (int n = 1; n <= max_n; ++n) {
    add_graph_tasks(tasks, n, GraphClass::all, connected, [budget](const Graph& g, const json& id, Tally& t) {
      const NicePartition np = canonical_nice_partition(g, budget);
      const int occ = static_cast<int>(np.inducing_cover.members.size());
      const int within = tau(within_graph(g, np.partition), budget);
      std::string why;
      if (!validate_nice_partition(g, np, budget, &why)) t.fail({{"instance", id}, {"error", why}});
      if (occ != within) t.fail({{"instance", id}, {"occ", occ}, {"tauWithin", within}});
    });
  }
  return tasks;
}

VertexSet random_subset(std::mt19937_64& rng, int n) {
  std::vector<Vertex> out;
  for (int v = 0; v < n; ++v) {
    if ((rng() >> 63) != 0) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

std::uint64_t mix(std::uint64_t seed, const CanonicalCode& c, int n) {
  std::uint64_t h = seed ^ 0x9E3779B97F4A7C15ULL;
  for (std::uint64_t x : {c.hi, c.lo, static_cast<std::uint64_t>(n)}) {
    h ^= x + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// --- odd Z-path dichotomy with random Z.
std::vector<Task> geelen_tasks(const SweepConfig& cfg, const Budget& budget) {
  const std::string s = "geelen-dichotomy";
  const int max_n = static_cast<int>(cfg.get_int(s, "max_n", 8));
  const int ell_max = static_cast<int>(cfg.get_int(s, "ell_max", 2));
  const int per_graph = static_cast<int>(cfg.get_int(s, "z_per_graph", 1));
  const auto seed = static_cast<std::uint64_t>(cfg.get_int(s, "seed", 1));
  std::vector<Task> tasks;
  for (int n = 1; n <= max_n; ++n) {
    add_graph_tasks(tasks, n, GraphClass::all, false, [=](const Graph& g, const json& id, Tally& t) {
      std::mt19937_64 rng(mix(seed, canonical_code(g), g.order()));
      for (int rep = 0; rep < per_graph; ++rep) {
        const VertexSet z = random_subset(rng, g.order());
        for (int ell = 1; ell <= ell_max; ++ell) {
          t.bump("cases");
          const ZPathCertificate cert = odd_z_path_dichotomy(g, z, ell, budget);
          json where = {{"instance", id}, {"z", to_json(z)}, {"ell", ell}};
          if (cert.packed()) {
            t.bump("packings");
            std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
            bool ok = static_cast<int>(cert.packing.size()) == ell;
            for (const ZPath& p : cert.packing) {
              ok = ok && is_odd_z_path(g, z, p);
              for (Vertex v : p.vertices) {
                ok = ok && used[static_cast<std::size_t>(v)] == 0;
                used[static_cast<std::size_t>(v)] = 1;
              }
            }
            if (!ok) t.fail(where);
            continue;
          }
          t.bump("hittingSets");
          const VertexSet& x = *cert.hitting_set;
          if (cert.violation || static_cast<int>(x.size()) > 2 * ell - 2) {
            where["violation"] = true;
            t.fail(where);
            continue;
          }
          const Subgraph rest = remove_vertices(g, x);
          const auto again = odd_z_path_dichotomy(rest.graph, to_local(rest, z.minus(x)), 1, budget);
          if (again.packed()) t.fail(where);
        }
      }
    });
  }
  return tasks;
}

// Every set of k disjoint unordered pairs, each written with its smaller vertex first.
void for_each_pair_system(int n, int k, const std::function<void(const std::vector<TerminalPair>&)>& visit) {
  std::vector<TerminalPair> pairs;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int min_first) -> void {
    if (static_cast<int>(pairs.size()) == k) {
      visit(pairs);
      return;
    }
    for (int a = min_first; a < n; ++a) {
      if (used[static_cast<std::size_t>(a)] != 0) continue;
      used[static_cast<std::size_t>(a)] = 1;
      for (int b = a + 1; b < n; ++b) {
        if (used[static_cast<std::size_t>(b)] != 0) continue;
        used[static_cast<std::size_t>(b)] = 1;
        pairs.push_back({a, b});
        self(self, a + 1);
        pairs.pop_back();
        used[static_cast<std::size_t>(b)] = 0;
      }
      used[static_cast<std::size_t>(a)] = 0;
    }
  };
  rec(rec, 0);
}

bool terminals_independent(const Graph& g, const std::vector<TerminalPair>& pairs) {
  std::vector<Vertex> z;
  for (const auto& p : pairs) z.insert(z.end(), {p.s, p.t});
  for (Vertex a : z) {
    for (Vertex b : z) {
      if (a < b && g.adjacent(a, b)) return false;
    }
  }
  return true;
}

void check_extractors(const Graph& g, const std::vector<TerminalPair>& pairs, int t_g, const json& id, Tally& t,
                      const Budget& budget) {
  const int k = static_cast<int>(pairs.size());
  json where = {{"instance", id}, {"pairs", json::array()}};
  for (const auto& p : pairs) where["pairs"].push_back({p.s, p.t});
  const bool four_k = t_g >= 4 * k - 3;
  const bool indep = t_g >= 2 * k - 1 && terminals_independent(g, pairs);
  if (!four_k && !indep) return;
  const bool exists = brute_force_avoiding_matching(g, pairs, budget).has_value();
  if (four_k) {
    t.bump("extract4k");
    const Matching m = extract_pbm_4k(g, pairs, budget);
    if (!is_avoiding_matching(m, g, pairs) || !exists) {
      where["method"] = "extract4k";
      t.fail(where);
    }
  }
  if (indep) {
    t.bump("independent");
    PbmTrace trace;
    const Matching m = extract_pbm_independent(g, pairs, budget, &trace);
    t.bump("deadBranches", trace.dead_branch_activations);
    if (!is_avoiding_matching(m, g, pairs) || !exists || trace.dead_branch_activations != 0) {
      where["method"] = "independent";
      where["deadBranches"] = trace.dead_branch_log;
      t.fail(where);
    }
  }
}

// --- both matching extractors against the exhaustive search.
std::vector<Task> pbm_tasks(const SweepConfig& cfg, const Budget& budget) {
  const std::string s = "pbm-extractors";
  const int max_n = static_cast<int>(cfg.get_int(s, "max_n", 8));
  const int k_max = static_cast<int>(cfg.get_int(s, "k_max", 3));
  const int sample_n_max = static_cast<int>(cfg.get_int(s, "sample_n_max", 9));
  const long long samples = cfg.get_int(s, "samples", 20000);
  const auto seed = static_cast<std::uint64_t>(cfg.get_int(s, "seed", 1));
  std::vector<Task> tasks;
  for (int n = 2; n <= max_n; ++n) {
    add_graph_tasks(tasks, n, GraphClass::all, false, [=](const Graph& g, const json& id, Tally& t) {
      const int t_g = tau(g, budget);
      for (int k = 1; k <= k_max && 2 * k <= g.order(); ++k) {
        for_each_pair_system(g.order(), k, [&](const std::vector<TerminalPair>& pairs) {
          check_extractors(g, pairs, t_g, id, t, budget);
        });
      }
    });
  }
  // Sampled instances above the exhaustive range.
  const long long per_task = 200;
  for (long long first = 0; first < samples && sample_n_max > max_n; first += per_task) {
    tasks.push_back([=]() {
      Tally t;
      for (long long i = first; i < std::min(samples, first + per_task); ++i) {
        std::mt19937_64 rng(seed * 1'000'003ULL + static_cast<std::uint64_t>(i));
        const int n = max_n + 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(sample_n_max - max_n));
        const double p = 0.2 + 0.7 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
        InstanceSpec spec{Family::random_gnp, n, p, rng(), 0, 0, 0, {}};
        const Graph g = sample_random(spec);
        const int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(k_max, n / 2)));
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) perm[static_cast<std::size_t>(v)] = v;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<TerminalPair> pairs;
        for (int j = 0; j < k; ++j) pairs.push_back({perm[2 * j], perm[2 * j + 1]});
        const json id = {{"family", "randomGnp"}, {"n", n}, {"p", p}, {"seed", spec.seed}, {"sample", i}};
        t.bump("graphs");
        try {
          check_extractors(g, pairs, tau(g, budget), id, t, budget);
        } catch (const ResourceLimitError& e) {
          t.exhausted.push_back({{"instance", id}, {"error", e.what()}});
        } catch (const std::exception& e) {
          t.fail({{"instance", id}, {"error", e.what()}});
        }
      }
      return finish({{"sampled", true}, {"first", first}}, t);
    });
  }
  return tasks;
}

// --- tau-critical graphs have tau >= n/2.
std::vector<Task> erdos_gallai_tasks(const SweepConfig& cfg, const Budget& budget) {
  const int max_n = static_cast<int>(cfg.get_int("erdos-gallai", "max_n", 9));
  std::vector<Task> tasks;
  for (int n = 1; n <= max_n; ++n) {
    add_graph_tasks(tasks, n, GraphClass::all, false, [budget](const Graph& g, const json& id, Tally& t) {
      if (!is_tau_critical(g, budget)) return;
      t.bump("critical");
      const int tv = tau(g, budget);
      if (2 * tv < g.order()) t.fail({{"instance", id}, {"tau", tv}});
    });
  }
  return tasks;
}

// --- odd cycle through v exists iff the twin system has an odd linkage.
std::vector<Task> twin_tasks(const SweepConfig& cfg, const Budget& budget) {
  const int max_n = static_cast<int>(cfg.get_int("twin-reduction", "max_n", 8));
  std::vector<Task> tasks;
  for (int n = 1; n <= max_n; ++n) {
    add_graph_tasks(tasks, n, GraphClass::all, false, [budget](const Graph& g, const json& id, Tally& t) {
      for (Vertex v = 0; v < g.order(); ++v) {
        t.bump("cases");
        const VertexSet s{v};
        const bool cycle = find_odd_s_cycle(g, s).has_value();
        const TwinReduction red = twin_reduction(g, s);
        const auto link = find_parity_linkage(red.graph, red.system, budget);
        bool ok = cycle == link.has_value();
        if (ok && link) {
          const Cycle c = cycle_from_twin_path(red, link->paths[0]);
          ok = is_cycle_of(g, c) && c.odd() && c.meets(s);
        }
        if (!ok) t.fail({{"instance", id}, {"vertex", v}, {"cycle", cycle}});
      }
    });
  }
  return tasks;
}

// --- Konig on bipartite graphs and the maximal matching bound everywhere.
std::vector<Task> konig_tasks(const SweepConfig& cfg, const Budget& budget) {
  const std::string s = "konig";
  const int bip_max = static_cast<int>(cfg.get_int(s, "bipartite_max_n", 12));
  const int all_max = static_cast<int>(cfg.get_int(s, "max_n", 9));
  const long long samples = cfg.get_int(s, "samples", 10000);
  const int sample_min = static_cast<int>(cfg.get_int(s, "sample_min_n", 10));
  const int sample_max = static_cast<int>(cfg.get_int(s, "sample_max_n", 12));
  const auto seed = static_cast<std::uint64_t>(cfg.get_int(s, "seed", 1));
  auto greedy_check = [budget](const Graph& g, const json& id, Tally& t) {
    const MatchingCoverBound b = maximal_matching_cover_bound(g);
    const int tv = tau(g, budget);
    const bool ok = is_matching_of(g, b.matching) && is_vertex_cover(g, b.covered) &&
                    b.covered.size() == 2 * b.matching.size() && tv <= static_cast<int>(2 * b.matching.size());
    if (!ok) t.fail({{"instance", id}, {"tau", tv}, {"matching", b.matching.size()}});
  };
  std::vector<Task> tasks;
  for (int n = 1; n <= bip_max; ++n) {
    add_graph_tasks(tasks, n, GraphClass::bipartite, false, [budget](const Graph& g, const json& id, Tally& t) {
      const Matching m = konig_matching(g);
      const int tv = tau(g, budget);
      if (!is_matching_of(g, m) || static_cast<int>(m.size()) != tv) {
        t.fail({{"instance", id}, {"nu", m.size()}, {"tau", tv}});
      }
    }, 2048);
  }
  for (int n = 1; n <= all_max; ++n) add_graph_tasks(tasks, n, GraphClass::all, false, greedy_check, 2048);
  const long long per_task = 1000;
  for (long long first = 0; first < samples && sample_max >= sample_min; first += per_task) {
    tasks.push_back([=]() {
      Tally t;
      for (long long i = first; i < std::min(samples, first + per_task); ++i) {
        std::mt19937_64 rng(seed * 7'919ULL + static_cast<std::uint64_t>(i));
        const int n = sample_min + static_cast<int>(rng() % static_cast<std::uint64_t>(sample_max - sample_min + 1));
        const double p = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        InstanceSpec spec{Family::random_gnp, n, p, rng(), 0, 0, 0, {}};
        const json id = {{"family", "randomGnp"}, {"n", n}, {"p", p}, {"seed", spec.seed}};
        t.bump("graphs");
        try {
          greedy_check(sample_random(spec), id, t);
        } catch (const ResourceLimitError& e) {
          t.exhausted.push_back({{"instance", id}, {"error", e.what()}});
        }
      }
      return finish({{"sampled", true}, {"first", first}}, t);
    });
  }
  return tasks;
}

// --- the two extremal constructions.
std::vector<Task> tight_tasks(const SweepConfig& cfg, const Budget& budget) {
  const std::string s = "tight-examples";
  const int k = static_cast<int>(cfg.get_int(s, "k", 2));
  const int side_max = static_cast<int>(cfg.get_int(s, "side_max", 8));
  const int npl_min = static_cast<int>(cfg.get_int(s, "npl_side_min", 2 * k));
  const int tight_min = static_cast<int>(cfg.get_int(s, "tight_side_min", std::max(2 * k - 1, k)));
  std::vector<Task> tasks;
  for (int side = 2 * k; side <= side_max; ++side) {
    tasks.push_back([=]() {
      Tally t;
      const GeneratedSystem gen = gen_non_parity_linked(k, side);
      const int occ = static_cast<int>(min_odd_cycle_cover(gen.graph, budget).members.size());
      const bool linked = find_parity_linkage(gen.graph, gen.system, budget).has_value();
      const bool holds = occ == 4 * k - 4 && !linked;
      t.bump("holds", holds ? 1 : 0);
      if (!holds && side >= npl_min) t.fail({{"occ", occ}, {"parityLinked", linked}});
      return finish({{"family", "nonParityLinked"}, {"k", k}, {"side", side}, {"occ", occ},
                     {"parityLinked", linked}},
                    t);
    });
  }
  for (int tau_value = 1; tau_value <= k; ++tau_value) {
    for (int side = std::max(2 * k - 1, k); side <= side_max; ++side) {
      tasks.push_back([=]() {
        Tally t;
        const TightCover gen = gen_tight_cover(k, tau_value, side);
        const int tau_s = tau(induced_subgraph(gen.graph, gen.s).graph, budget);
        const bool packed = pack_odd_s_cycles(gen.graph, gen.s, k, budget).has_value();
        const int occ = static_cast<int>(min_odd_cycle_cover(gen.graph, budget).members.size());
        const bool holds = tau_s == tau_value - 1 && !packed && occ == 2 * k - 2 + tau_s;
        t.bump("holds", holds ? 1 : 0);
        if (!holds && side >= tight_min) t.fail({{"tauS", tau_s}, {"packed", packed}, {"occ", occ}});
        return finish({{"family", "tightCover"}, {"k", k}, {"tau", tau_value}, {"side", side}, {"tauS", tau_s},
                       {"packed", packed}, {"occ", occ}},
                      t);
      });
    }
  }
  return tasks;
}

// Dense graph on n vertices with verified connectivity at least `kappa`.
Graph dense_instance(int n, int kappa, std::uint64_t seed, int& connectivity) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    const double p = n - 1 > kappa ? static_cast<double>(n - 1 - kappa) / (2.0 * (n - 1)) : 0.0;
    InstanceSpec spec{Family::random_dense, n, p, seed + attempt * 0x10001ULL, 0, 0, 0, {}};
    Graph g = sample_random(spec);
    connectivity = vertex_connectivity(g);
    if (connectivity >= kappa) return g;
  }
}

// --- k = 1 at genuine 50-connectivity.
std::vector<Task> theorem1_tasks(const SweepConfig& cfg, const Budget& budget) {
  const std::string s = "theorem1-k1";
  const long long count = cfg.get_int(s, "instances", 100);
  const int n_min = static_cast<int>(cfg.get_int(s, "n_min", 51));
  const int n_max = static_cast<int>(cfg.get_int(s, "n_max", 64));
  const int kappa = static_cast<int>(cfg.get_int(s, "connectivity", 50));
  const auto seed = static_cast<std::uint64_t>(cfg.get_int(s, "seed", 1));
  std::vector<Task> tasks;
  for (long long i = 0; i < count; ++i) {
    tasks.push_back([=]() {
      Tally t;
      std::mt19937_64 rng(seed * 104'729ULL + static_cast<std::uint64_t>(i));
      const int n = n_min + static_cast<int>(rng() % static_cast<std::uint64_t>(n_max - n_min + 1));
      int connectivity = 0;
      const std::uint64_t graph_seed = rng();
      const Graph g = dense_instance(n, kappa, graph_seed, connectivity);
      VertexSet terminals;
      if (i % 2 == 0) {
        std::vector<Vertex> all(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
        terminals = VertexSet(std::move(all));
      } else {
        terminals = VertexSet{static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n))};
      }
      const DichotomyResult r = dichotomy_s_cycles(g, terminals, 1, budget);
      bool ok = r.bound_met;
      if (r.packing) {
        ok = ok && r.packing->size() == 1 && validate_packing(g, terminals, *r.packing);
      } else {
        ok = ok && r.cover && r.cover->empty() && verify_cover(g, terminals, *r.cover);
      }
      // Bipartite form: one odd cycle or the graph is already bipartite.
      const auto any = find_odd_cycle(g);
      ok = ok && (any ? is_cycle_of(g, *any) && any->odd() : is_bipartite(g).has_value());
      t.bump(r.packing ? "packings" : "covers");
      if (!ok) t.fail({{"n", n}, {"seed", graph_seed}});
      return finish({{"n", n}, {"connectivity", connectivity}, {"graphSeed", graph_seed},
                     {"terminals", terminals.size()}, {"outcome", r.packing ? "packing" : "cover"}},
                    t);
    });
  }
  return tasks;
}

using SuiteFactory = std::function<std::vector<Task>(const SweepConfig&, const Budget&)>;

const std::vector<std::pair<std::string, SuiteFactory>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFactory>> suites = {
      {"observation2", observation2_tasks}, {"geelen-dichotomy", geelen_tasks},
      {"pbm-extractors", pbm_tasks},        {"erdos-gallai", erdos_gallai_tasks},
      {"twin-reduction", twin_tasks},       {"konig", konig_tasks},
      {"tight-examples", tight_tasks},      {"theorem1-k1", theorem1_tasks},
  };
  return suites;
}

}  // namespace

std::vector<std::string> sweep_suites() {
  std::vector<std::string> out;
  for (const auto& [name, factory] : registry()) out.push_back(name);
  return out;
}

SweepReport run_sweep(const std::string& suite, const SweepConfig& config) {
  const auto& reg = registry();
  const auto it = std::find_if(reg.begin(), reg.end(), [&](const auto& e) { return e.first == suite; });
  if (it == reg.end()) throw InputError("unknown sweep suite '" + suite + "'");
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Task> tasks = it->second(config, config.budget(suite));

  SweepReport report;
  report.suite = suite;
  report.records.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      json record;
      try {
        record = tasks[i]();
      } catch (const ResourceLimitError& e) {
        record = {{"ok", true}, {"budgetExhausted", 1}, {"counterexamples", 0}, {"error", e.what()}};
      } catch (const std::exception& e) {
        record = {{"ok", false}, {"budgetExhausted", 0}, {"counterexamples", 1}, {"error", e.what()}};
      }
      record["suite"] = suite;
      record["id"] = i;
      report.records[i] = std::move(record);
    }
  };
  const int workers = std::min<int>(config.workers(suite), static_cast<int>(std::max<std::size_t>(1, tasks.size())));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (const auto& r : report.records) {
    report.counterexamples += r.value("counterexamples", std::size_t{0});
    report.budget_exhausted += r.value("budgetExhausted", std::size_t{0});
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace oddpack
