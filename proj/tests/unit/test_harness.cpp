#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "oddpack/covers.hpp"
#include "oddpack/enumerate.hpp"
#include "oddpack/errors.hpp"
#include "oddpack/generators.hpp"
#include "oddpack/json_io.hpp"
#include "oddpack/partitions.hpp"
#include "oddpack/sweep.hpp"
#include "oracles.hpp"

using namespace oddpack;

TEST(Generators, NonParityLinkedShape) {
  const auto one = gen_non_parity_linked(1, 3);
  EXPECT_TRUE(is_bipartite(one.graph));
  const auto gen = gen_non_parity_linked(2, 4);
  EXPECT_EQ(gen.graph.order(), 8);
  // 16 bipartite edges, K3 in A, K4 minus a perfect matching in B.
  EXPECT_EQ(gen.graph.size(), 16U + 3U + 4U);
  EXPECT_EQ(gen.system.k(), 2);
  EXPECT_EQ(gen.system.parity_set, (std::vector<int>{0, 1}));
  EXPECT_FALSE(gen.graph.adjacent(gen.system.pairs[0].s, gen.system.pairs[0].t));
  EXPECT_THROW(gen_non_parity_linked(2, 3), InputError);
}

TEST(Generators, TightCoverStatistics) {
  for (int t : {1, 2}) {
    const TightCover gen = gen_tight_cover(2, t, 7);
    EXPECT_EQ(gen.s.size(), 2U);
    EXPECT_EQ(tau(induced_subgraph(gen.graph, gen.s).graph), t - 1);
  }
  EXPECT_THROW(gen_tight_cover(2, 3, 7), InputError);
  EXPECT_THROW(gen_tight_cover(2, 1, 2), InputError);
}

TEST(Generators, SampleRandom) {
  EXPECT_EQ(sample_random({Family::random_gnp, 8, 0.0, 1, 0, 0, 0, {}}).size(), 0U);
  EXPECT_EQ(sample_random({Family::random_gnp, 8, 1.0, 1, 0, 0, 0, {}}), fixture::complete(8));
  const InstanceSpec spec{Family::random_gnp, 12, 0.4, 77, 0, 0, 0, {}};
  EXPECT_EQ(sample_random(spec), sample_random(spec));
  InstanceSpec other = spec;
  other.seed = 78;
  EXPECT_NE(sample_random(spec), sample_random(other));
  EXPECT_THROW(sample_random({Family::random_gnp, 5, 1.5, 1, 0, 0, 0, {}}), InputError);
}

TEST(Generators, FamilyNames) {
  for (const char* name : {"nonParityLinked", "tightCover", "randomGnp", "randomDense", "file"}) {
    EXPECT_STREQ(to_string(family_from_string(name)), name);
  }
  EXPECT_THROW(family_from_string("petersen"), InputError);
}

TEST(Enumerate, CountsMatchKnownSequences) {
  const std::vector<std::size_t> all{1, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 0; n < static_cast<int>(all.size()); ++n) {
    EXPECT_EQ(enumerate_codes(n).size(), all[static_cast<std::size_t>(n)]) << n;
  }
  const std::vector<std::size_t> bip{1, 1, 2, 3, 7, 13, 35, 88, 303};
  for (int n = 0; n < static_cast<int>(bip.size()); ++n) {
    EXPECT_EQ(enumerate_codes(n, GraphClass::bipartite).size(), bip[static_cast<std::size_t>(n)]) << n;
  }
}

TEST(Enumerate, CanonicalFormIgnoresLabels) {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = oracle::random_graph(9, 0.4, seed);
    std::vector<int> perm(9);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> e;
    for (const auto& x : g.edges()) e.emplace_back(perm[static_cast<std::size_t>(x.u)], perm[static_cast<std::size_t>(x.v)]);
    const Graph h(9, e);
    EXPECT_EQ(canonical_code(g), canonical_code(h));
    EXPECT_EQ(canonical_form(g).size(), g.size());
  }
}

TEST(SweepConfig, Parsing) {
  std::istringstream in("# comment\nmax_n = 5\nkonig.max_n=3  # trailing\n\nworkers = 2\n");
  const SweepConfig cfg = SweepConfig::parse(in);
  EXPECT_EQ(cfg.get_int("konig", "max_n", 0), 3);
  EXPECT_EQ(cfg.get_int("observation2", "max_n", 0), 5);
  EXPECT_EQ(cfg.workers("konig"), 2);
  EXPECT_FALSE(cfg.has("konig", "seed"));
  std::istringstream bad("max_n = 5\njunk\n");
  try {
    SweepConfig::parse(bad);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2U);
  }
  SweepConfig c;
  c.set("max_n", "five");
  EXPECT_THROW(c.get_int("x", "max_n", 1), InputError);
}

TEST(SweepConfig, BudgetKeys) {
  SweepConfig c;
  c.set("konig.budget_nodes", "1000");
  c.set("budget_seconds", "2.5");
  EXPECT_EQ(c.budget("konig").max_nodes, 1000U);
  EXPECT_DOUBLE_EQ(c.budget("konig").max_seconds, 2.5);
  EXPECT_EQ(c.budget("other").max_nodes, Budget{}.max_nodes);
}

TEST(SweepConfig, EnvironmentPath) {
  const std::string path = ::testing::TempDir() + "oddpack_sweep.cfg";
  {
    std::ofstream out(path);
    out << "observation2.max_n = 4\n";
  }
  ::setenv(kSweepConfigEnv, path.c_str(), 1);
  EXPECT_EQ(SweepConfig::from_environment().get_int("observation2", "max_n", 0), 4);
  ::unsetenv(kSweepConfigEnv);
  EXPECT_FALSE(SweepConfig::from_environment().has("observation2", "max_n"));
}

TEST(Sweep, UnknownSuite) { EXPECT_THROW(run_sweep("nope"), InputError); }

TEST(Sweep, SmallRunsAreCleanAndOrdered) {
  SweepConfig cfg;
  cfg.set("max_n", "5");
  cfg.set("bipartite_max_n", "6");
  cfg.set("samples", "50");
  cfg.set("instances", "2");
  cfg.set("workers", "2");
  for (const auto& suite : sweep_suites()) {
    const SweepReport r = run_sweep(suite, cfg);
    EXPECT_TRUE(r.clean()) << suite;
    EXPECT_FALSE(r.records.empty()) << suite;
    for (std::size_t i = 0; i < r.records.size(); ++i) EXPECT_EQ(r.records[i]["id"], i);
  }
}

TEST(Sweep, ReportsAreReproducible) {
  SweepConfig cfg;
  cfg.set("max_n", "5");
  cfg.set("samples", "100");
  const SweepReport a = run_sweep("pbm-extractors", cfg);
  cfg.set("workers", "3");
  const SweepReport b = run_sweep("pbm-extractors", cfg);
  EXPECT_EQ(a.records, b.records);
}

TEST(Sweep, BudgetExhaustionIsRecorded) {
  SweepConfig cfg;
  cfg.set("max_n", "6");
  cfg.set("budget_nodes", "3");
  const SweepReport r = run_sweep("observation2", cfg);
  EXPECT_GT(r.budget_exhausted, 0U);
  EXPECT_TRUE(r.clean());
}

TEST(Sweep, WriteReportEndsWithSummary) {
  SweepConfig cfg;
  cfg.set("side_max", "5");
  const SweepReport r = run_sweep("tight-examples", cfg);
  std::ostringstream out;
  write_report(out, r);
  std::istringstream lines(out.str());
  std::string line;
  std::size_t count = 0;
  json last;
  while (std::getline(lines, line)) {
    last = json::parse(line);
    ++count;
  }
  EXPECT_EQ(count, r.records.size() + 1);
  EXPECT_TRUE(last["summary"].get<bool>());
  EXPECT_EQ(last["counterexamples"], 0);
}

TEST(Json, OneBasedOutput) {
  const Graph g(3, {{0, 1}, {1, 2}});
  const json j = to_json(g, 1);
  EXPECT_EQ(j["edges"][0], json::array({1, 2}));
  EXPECT_EQ(to_json(VertexSet{0, 2}, 1), json::array({1, 3}));
  const json c = to_json(Cycle{{0, 1, 2}});
  EXPECT_EQ(c["length"], 3);
}
