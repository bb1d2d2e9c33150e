#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oddpack/covers.hpp"
#include "oddpack/enumerate.hpp"
#include "oddpack/errors.hpp"
#include "oddpack/generators.hpp"
#include "oracles.hpp"

using namespace oddpack;

namespace {
VertexSet vs(const std::vector<int>& v) { return VertexSet(v); }
}  // namespace

TEST(MinOddCycleCover, BipartiteIsEmpty) {
  EXPECT_TRUE(min_odd_cycle_cover(fixture::complete_bipartite(3, 4)).members.empty());
}

// The subset oracle finds no cover of size 2 in K5: two deletions leave a triangle.
TEST(MinOddCycleCover, K5NeedsThree) {
  const Graph k5 = fixture::complete(5);
  const auto expected = oracle::min_odd_cycle_cover(k5);
  ASSERT_EQ(expected, (std::vector<int>{0, 1, 2}));
  const OddCycleCover c = min_odd_cycle_cover(k5);
  EXPECT_EQ(c.members, vs(expected));
  EXPECT_TRUE(c.minimal);
}

TEST(MinOddCycleCover, NonParityLinkedFamily) {
  const auto gen = gen_non_parity_linked(2, 8);
  EXPECT_EQ(min_odd_cycle_cover(gen.graph).members.size(), 4U);
}

TEST(MinOddCycleCover, LexLeastMatchesOracleUpToSeven) {
  for (int n = 1; n <= 7; ++n) {
    for_each_graph(n, [](const Graph& g) { ASSERT_EQ(min_odd_cycle_cover(g).members, vs(oracle::min_odd_cycle_cover(g))); });
  }
}

TEST(MinOddCycleCover, RandomUpToTwelve) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const int n = 8 + static_cast<int>(seed % 5);
    const Graph g = oracle::random_graph(n, 0.2 + 0.1 * static_cast<double>(seed % 6), seed);
    const OddCycleCover c = min_odd_cycle_cover(g);
    EXPECT_EQ(c.members, vs(oracle::min_odd_cycle_cover(g))) << "seed " << seed;
    EXPECT_TRUE(is_odd_cycle_cover(g, c.members));
  }
}

TEST(MinOddCycleCover, BudgetExhaustionThrows) {
  EXPECT_THROW(min_odd_cycle_cover(fixture::complete(12), Budget{5, 0.0}), ResourceLimitError);
}

TEST(AllMinOddCycleCovers, MatchesOracle) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = oracle::random_graph(7, 0.45, seed);
    const std::size_t size = oracle::min_odd_cycle_cover(g).size();
    std::vector<VertexSet> expected;
    for (std::uint64_t m = 0; m < (1U << 7); ++m) {
      if (static_cast<std::size_t>(std::popcount(m)) == size && oracle::bipartite(g, 0x7F & ~m)) {
        expected.push_back(fixture::from_mask(m));
      }
    }
    auto got = all_min_odd_cycle_covers(g);
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, expected);
  }
}

TEST(MinOddSCycleCover, EmptyTerminals) {
  EXPECT_TRUE(min_odd_s_cycle_cover(fixture::complete(5), {}).members.empty());
}

TEST(MinOddSCycleCover, TwoTriangles) {
  const Graph g = fixture::cliques(2, 3);
  ASSERT_EQ(oracle::min_odd_s_cycle_cover(g, 0x3F).size(), 2U);
  EXPECT_EQ(min_odd_s_cycle_cover(g, fixture::all(g)).members.size(), 2U);
}

// Deleting the terminal itself is allowed, so one vertex suffices.
TEST(MinOddSCycleCover, K5SingleTerminal) {
  const Graph k5 = fixture::complete(5);
  const auto expected = oracle::min_odd_s_cycle_cover(k5, 0x1);
  ASSERT_EQ(expected, std::vector<int>{0});
  const OddSCycleCover c = min_odd_s_cycle_cover(k5, {0});
  EXPECT_EQ(c.members, vs(expected));
  EXPECT_EQ(c.terminals, VertexSet({0}));
}

TEST(MinOddSCycleCover, MatchesOracleAllSubsets) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = oracle::random_graph(7, 0.4, seed);
    for (std::uint64_t s = 0; s < (1U << 7); s += 3) {
      const OddSCycleCover c = min_odd_s_cycle_cover(g, fixture::from_mask(s));
      ASSERT_EQ(c.members, vs(oracle::min_odd_s_cycle_cover(g, s))) << "seed " << seed << " s " << s;
      ASSERT_TRUE(verify_cover(g, fixture::from_mask(s), c.members));
    }
  }
}

TEST(MinOddSCycleCover, MonotoneAndFullSetAgrees) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = oracle::random_graph(9, 0.35, seed);
    const std::uint64_t s = (seed * 0x9E3779B97F4A7C15ULL) & 0x1FF;
    const std::uint64_t bigger = s | (seed * 31 & 0x1FF);
    EXPECT_LE(min_odd_s_cycle_cover(g, fixture::from_mask(s)).members.size(),
              min_odd_s_cycle_cover(g, fixture::from_mask(bigger)).members.size());
    EXPECT_EQ(min_odd_s_cycle_cover(g, fixture::all(g)).members.size(), min_odd_cycle_cover(g).members.size());
  }
}

TEST(VerifyCover, Examples) {
  const Graph c5 = fixture::cycle(5);
  EXPECT_TRUE(verify_cover(c5, fixture::all(c5), {0}));
  EXPECT_FALSE(verify_cover(c5, fixture::all(c5), {}));
  const Graph k5 = fixture::complete(5);
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) {
      ASSERT_TRUE(oracle::has_odd_cycle_through(k5, 0x1F, 0x1F & ~((1U << a) | (1U << b))));
      EXPECT_FALSE(verify_cover(k5, fixture::all(k5), {a, b}));
    }
  }
}
