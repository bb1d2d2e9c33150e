#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oddpack/enumerate.hpp"
#include "oddpack/errors.hpp"
#include "oddpack/generators.hpp"
#include "oddpack/partitions.hpp"
#include "oddpack/pbm.hpp"
#include "oracles.hpp"

using namespace oddpack;

namespace {

std::vector<std::pair<int, int>> plain(const std::vector<TerminalPair>& pairs) {
  std::vector<std::pair<int, int>> out;
  for (const auto& p : pairs) out.emplace_back(p.s, p.t);
  return out;
}

Matching indexed(std::vector<Edge> edges, std::vector<int> labels) { return {std::move(edges), std::move(labels)}; }

}  // namespace

TEST(TerminalSystem, Validation) {
  const Graph g = fixture::complete(6);
  EXPECT_NO_THROW(validate_terminal_system(g, TerminalSystem::plain({{0, 1}, {2, 3}})));
  EXPECT_THROW(validate_terminal_system(g, TerminalSystem::plain({{0, 1}, {1, 3}})), InputError);
  EXPECT_THROW(validate_terminal_system(g, TerminalSystem::plain({{0, 9}})), InputError);
  TerminalSystem bad = TerminalSystem::plain({{0, 1}});
  bad.parity_set = {1};
  bad.demanded = {Parity::odd};
  EXPECT_THROW(validate_terminal_system(g, bad), InputError);
}

TEST(IsParityBreaking, Examples) {
  const Graph k4 = fixture::complete(4);
  const Partition p{{0, 1, 2, 3}, {}};
  EXPECT_TRUE(is_parity_breaking({}, k4, p, TerminalSystem::plain({{0, 1}})));
  // k = 1: the edge may touch its own pair.
  EXPECT_TRUE(is_parity_breaking(indexed({{0, 2}}, {0}), k4, p, TerminalSystem::all_demanded({{0, 1}}, Parity::odd)));
  const Graph k6 = fixture::complete(6);
  const Partition q{{0, 1, 2, 3, 4, 5}, {}};
  const auto ts = TerminalSystem::all_demanded({{0, 1}, {2, 3}}, Parity::odd);
  EXPECT_FALSE(is_parity_breaking(indexed({{2, 4}, {3, 5}}, {0, 1}), k6, q, ts));
  EXPECT_TRUE(is_parity_breaking(indexed({{0, 4}, {3, 5}}, {0, 1}), k6, q, ts));
  // Edges must lie inside a part.
  EXPECT_FALSE(is_parity_breaking(indexed({{0, 4}, {3, 5}}, {0, 1}), k6, {{0, 1, 2, 3}, {4, 5}}, ts));
}

TEST(Extract4k, BaseCase) {
  const Graph k2(2, {{0, 1}});
  const Matching m = extract_pbm_4k(k2, {{0, 1}});
  ASSERT_EQ(m.size(), 1U);
  EXPECT_EQ(m.edges[0], Edge(0, 1));
}

// Traced: Y = {0..4}, r = 4, r' = 0 lies in pair 0, which is removed with 4;
// the base case then takes edge 23 for pair 1.
TEST(Extract4k, K6Trace) {
  const Graph k6 = fixture::complete(6);
  const std::vector<TerminalPair> pairs{{0, 1}, {2, 3}};
  ASSERT_TRUE(oracle::avoiding_matching_exists(k6, plain(pairs)));
  const Matching m = extract_pbm_4k(k6, pairs);
  EXPECT_TRUE(is_avoiding_matching(m, k6, pairs));
  EXPECT_EQ(m.edge_for(0), Edge(0, 4));
  EXPECT_EQ(m.edge_for(1), Edge(2, 3));
}

TEST(Extract4k, PreconditionBelowBound) {
  const Graph k5 = fixture::complete(5);
  ASSERT_EQ(tau(k5), 4);
  EXPECT_THROW(extract_pbm_4k(k5, {{0, 1}, {2, 3}}), PreconditionError);
}

TEST(ExtractIndependent, Examples) {
  const Graph p3(3, {{0, 2}, {1, 2}});
  EXPECT_EQ(extract_pbm_independent(p3, {{0, 1}}).size(), 1U);
  const Graph k44 = fixture::complete_bipartite(4, 4);
  const std::vector<TerminalPair> pairs{{0, 1}, {2, 3}};
  ASSERT_TRUE(oracle::avoiding_matching_exists(k44, plain(pairs)));
  PbmTrace trace;
  const Matching m = extract_pbm_independent(k44, pairs, {}, &trace);
  EXPECT_TRUE(is_avoiding_matching(m, k44, pairs));
  EXPECT_EQ(trace.dead_branch_activations, 0);
  EXPECT_THROW(extract_pbm_independent(fixture::complete(6), pairs), PreconditionError);
}

TEST(ExtractIndependent, TauTooSmall) {
  const Graph star = fixture::complete_bipartite(1, 4);
  EXPECT_THROW(extract_pbm_independent(star, {{1, 2}, {3, 4}}), PreconditionError);
}

// Both extractors on random graphs at 8 to 10 vertices, checked against the matching oracle.
TEST(Extractors, RandomAgainstOracle) {
  int four_k = 0;
  int indep = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const int n = 8 + static_cast<int>(seed % 3);
    const Graph h = oracle::random_graph(n, 0.3 + 0.1 * static_cast<double>(seed % 6), seed);
    const int k = 1 + static_cast<int>(seed % 3);
    std::vector<TerminalPair> pairs;
    for (int i = 0; i < k; ++i) pairs.push_back({(2 * i + static_cast<int>(seed)) % n, (2 * i + 1 + static_cast<int>(seed)) % n});
    const int t = tau(h);
    const bool exists = oracle::avoiding_matching_exists(h, plain(pairs));
    if (t >= 4 * k - 3) {
      ++four_k;
      EXPECT_TRUE(exists);
      EXPECT_TRUE(is_avoiding_matching(extract_pbm_4k(h, pairs), h, pairs)) << "seed " << seed;
    }
    bool independent = true;
    for (const auto& a : pairs) {
      for (const auto& b : pairs) {
        for (int x : {a.s, a.t}) {
          for (int y : {b.s, b.t}) independent = independent && !h.adjacent(x, y);
        }
      }
    }
    if (independent && t >= 2 * k - 1) {
      ++indep;
      PbmTrace trace;
      EXPECT_TRUE(exists);
      EXPECT_TRUE(is_avoiding_matching(extract_pbm_independent(h, pairs, {}, &trace), h, pairs)) << "seed " << seed;
      EXPECT_EQ(trace.dead_branch_activations, 0);
    }
  }
  EXPECT_GT(four_k, 50);
  EXPECT_GT(indep, 10);
}

TEST(BruteForcePbm, Examples) {
  const Graph c6 = fixture::cycle(6);
  const auto ts = TerminalSystem::all_demanded({{0, 3}}, Parity::odd);
  EXPECT_FALSE(brute_force_pbm(c6, {{0, 2, 4}, {1, 3, 5}}, ts));
  const Graph k4 = fixture::complete(4);
  const auto m = brute_force_pbm(k4, {{0, 1}, {2, 3}}, TerminalSystem::all_demanded({{0, 2}}, Parity::odd));
  ASSERT_TRUE(m);
  EXPECT_EQ(m->size(), 1U);
}

// From side 2k+1 on no nice partition admits one. At side 2k the tie rule
// moves cover vertices across and some partitions do.
TEST(BruteForcePbm, NonParityLinkedFamilyHasNone) {
  for (int side = 5; side <= 8; ++side) {
    const auto gen = gen_non_parity_linked(2, side);
    const auto parts = all_nice_partitions(gen.graph);
    ASSERT_FALSE(parts.empty());
    for (const auto& np : parts) EXPECT_FALSE(brute_force_pbm(gen.graph, np.partition, gen.system)) << "side " << side;
  }
  const auto small = gen_non_parity_linked(2, 4);
  bool any = false;
  for (const auto& np : all_nice_partitions(small.graph)) any = any || brute_force_pbm(small.graph, np.partition, small.system).has_value();
  EXPECT_TRUE(any);
}

TEST(BruteForcePbm, AgreesWithAvoidingOracle) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = oracle::random_graph(8, 0.4, seed);
    const NicePartition np = canonical_nice_partition(g);
    const Graph w = within_graph(g, np.partition);
    const std::vector<TerminalPair> pairs{{0, 1}, {2, 3}};
    const auto m = brute_force_pbm(g, np.partition, TerminalSystem::all_demanded(pairs, Parity::odd));
    EXPECT_EQ(m.has_value(), oracle::avoiding_matching_exists(w, plain(pairs)));
    if (m) EXPECT_TRUE(is_parity_breaking(*m, g, np.partition, TerminalSystem::all_demanded(pairs, Parity::odd)));
  }
}

TEST(Equivalence, TrivialCases) {
  const auto ts = TerminalSystem::all_demanded({{0, 1}}, Parity::odd);
  EXPECT_TRUE(nice_partition_equivalence_check(fixture::cycle(6), ts));
  // Two triangles sharing vertex 2: the shared vertex is the only minimum cover.
  const Graph bowtie(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  ASSERT_EQ(all_min_odd_cycle_covers(bowtie).size(), 1U);
  EXPECT_TRUE(nice_partition_equivalence_check(bowtie, ts));
}

TEST(Equivalence, ReportCountsPartitions) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = oracle::random_graph(8, 0.5, seed);
    const auto ts = TerminalSystem::all_demanded({{0, 1}, {2, 3}}, Parity::odd);
    const EquivalenceReport r = nice_partition_equivalence(g, ts);
    EXPECT_EQ(r.partitions, all_nice_partitions(g).size());
    EXPECT_EQ(r.uniform, r.with_pbm == 0 || r.with_pbm == r.partitions);
  }
}
