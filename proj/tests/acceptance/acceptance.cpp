// Runs the eight acceptance checks and prints one PASS/FAIL line for each.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oddpack/sweep.hpp"

using namespace oddpack;

namespace {

long long total(const SweepReport& r, const std::string& key) {
  long long sum = 0;
  for (const auto& rec : r.records) sum += rec.value(key, 0LL);
  return sum;
}

struct Check {
  int id;
  std::string name;
  std::string suite;
  std::vector<std::pair<std::string, std::string>> config;
  double max_seconds;
  // Extra conditions beyond "no counterexamples, no exhausted budgets, within time".
  std::function<bool(const SweepReport&, std::string&)> extra;
};

}  // namespace

int main() {
  const std::vector<Check> checks = {
      {1, "observation2: |OCC| = tau(G_AB) on all connected graphs n<=8", "observation2",
       {{"max_n", "8"}, {"connected_only", "1"}}, 300.0,
       [](const SweepReport& r, std::string& info) {
         // Connected graphs on 1..8 vertices: 1+1+2+6+21+112+853+11117.
         const long long graphs = total(r, "graphs");
         info = "graphs=" + std::to_string(graphs);
         return graphs == 12113;
       }},
      {2, "pbm extractors: exhaustive n<=8, 20000 samples at n=9, k<=3", "pbm-extractors",
       {{"max_n", "8"}, {"k_max", "3"}, {"sample_n_max", "9"}, {"samples", "20000"}, {"seed", "1"}}, 600.0,
       [](const SweepReport& r, std::string& info) {
         const long long dead = total(r, "deadBranches");
         info = "extract4k=" + std::to_string(total(r, "extract4k")) +
                " independent=" + std::to_string(total(r, "independent")) + " deadBranches=" + std::to_string(dead);
         return dead == 0 && total(r, "extract4k") > 0 && total(r, "independent") > 0;
       }},
      {3, "odd Z-path dichotomy: ell in {1,2}, all graphs n<=8, random Z", "geelen-dichotomy",
       {{"max_n", "8"}, {"ell_max", "2"}, {"z_per_graph", "1"}, {"seed", "1"}}, 600.0,
       [](const SweepReport& r, std::string& info) {
         const long long cases = total(r, "cases");
         info = "cases=" + std::to_string(cases) + " hittingSets=" + std::to_string(total(r, "hittingSets"));
         return cases >= 10000;
       }},
      {4, "tau-critical graphs on n<=9 have tau >= n/2", "erdos-gallai", {{"max_n", "9"}}, 600.0,
       [](const SweepReport& r, std::string& info) {
         const long long critical = total(r, "critical");
         info = "graphs=" + std::to_string(total(r, "graphs")) + " critical=" + std::to_string(critical);
         return total(r, "graphs") == 288266 && critical > 0;
       }},
      {5, "tight examples k=2 at side sizes up to 8", "tight-examples",
       {{"k", "2"}, {"side_max", "8"}, {"npl_side_min", "4"}, {"tight_side_min", "3"}}, 240.0,
       [](const SweepReport& r, std::string& info) {
         const long long holds = total(r, "holds");
         info = "instances=" + std::to_string(r.records.size()) + " holding=" + std::to_string(holds);
         return holds == static_cast<long long>(r.records.size()) && r.records.size() == 17;
       }},
      {6, "twin reduction agrees with odd cycles, all graphs n<=8", "twin-reduction", {{"max_n", "8"}}, 600.0,
       [](const SweepReport& r, std::string& info) {
         info = "cases=" + std::to_string(total(r, "cases"));
         return total(r, "graphs") == 13598;
       }},
      {7, "Konig on bipartite n<=12; tau <= 2|M| on all n<=9 plus samples n<=12", "konig",
       {{"bipartite_max_n", "12"}, {"max_n", "9"}, {"samples", "10000"}, {"sample_min_n", "10"},
        {"sample_max_n", "12"}, {"seed", "1"}},
       600.0,
       [](const SweepReport& r, std::string& info) {
         info = "graphs=" + std::to_string(total(r, "graphs"));
         return total(r, "graphs") > 300000;
       }},
      {8, "k=1 at connectivity >= 50, n in [51,64], 100 instances", "theorem1-k1",
       {{"instances", "100"}, {"n_min", "51"}, {"n_max", "64"}, {"connectivity", "50"}, {"seed", "1"}}, 600.0,
       [](const SweepReport& r, std::string& info) {
         int min_kappa = 1 << 30;
         for (const auto& rec : r.records) min_kappa = std::min(min_kappa, rec.value("connectivity", 0));
         info = "instances=" + std::to_string(r.records.size()) + " minConnectivity=" + std::to_string(min_kappa);
         return r.records.size() >= 100 && min_kappa >= 50;
       }},
  };

  int failed = 0;
  for (const Check& c : checks) {
    SweepConfig cfg;
    for (const auto& [k, v] : c.config) cfg.set(c.suite + "." + k, v);
    std::string info;
    bool ok = false;
    double seconds = 0.0;
    std::size_t counterexamples = 0;
    std::size_t exhausted = 0;
    try {
      const SweepReport r = run_sweep(c.suite, cfg);
      seconds = r.seconds;
      counterexamples = r.counterexamples;
      exhausted = r.budget_exhausted;
      const bool extra = c.extra(r, info);
      ok = extra && counterexamples == 0 && exhausted == 0 && seconds <= c.max_seconds;
    } catch (const std::exception& e) {
      info = std::string("error: ") + e.what();
    }
    std::printf("%s [%d] %s | counterexamples=%zu budgetExhausted=%zu %s time=%.1fs (limit %.0fs)\n",
                ok ? "PASS" : "FAIL", c.id, c.name.c_str(), counterexamples, exhausted, info.c_str(), seconds,
                c.max_seconds);
    std::fflush(stdout);
    if (!ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
