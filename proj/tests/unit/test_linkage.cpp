#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oddpack/covers.hpp"
#include "oddpack/errors.hpp"
#include "oddpack/generators.hpp"
#include "oddpack/linkage.hpp"
#include "oddpack/partitions.hpp"
#include "oracles.hpp"

using namespace oddpack;

namespace {

std::vector<std::pair<int, int>> plain(const TerminalSystem& ts) {
  std::vector<std::pair<int, int>> out;
  for (const auto& p : ts.pairs) out.emplace_back(p.s, p.t);
  return out;
}

std::vector<int> parity_vector(const TerminalSystem& ts) {
  std::vector<int> out(ts.pairs.size(), -1);
  for (std::size_t i = 0; i < ts.parity_set.size(); ++i) {
    out[static_cast<std::size_t>(ts.parity_set[i])] = ts.demanded[i] == Parity::odd ? 1 : 0;
  }
  return out;
}

// K_{6,6} on {0..5} x {6..11} plus the edge 01 inside the first side.
Graph near_bipartite() {
  std::vector<Edge> e{{0, 1}};
  for (int a = 0; a < 6; ++a) {
    for (int b = 6; b < 12; ++b) e.emplace_back(a, b);
  }
  return Graph(12, e);
}

}  // namespace

TEST(Linkage, Examples) {
  const auto one = find_linkage(fixture::path(5), TerminalSystem::plain({{0, 4}}));
  ASSERT_TRUE(one);
  EXPECT_EQ(one->paths[0], (std::vector<Vertex>{0, 1, 2, 3, 4}));
  const Graph c4 = fixture::cycle(4);
  ASSERT_FALSE(oracle::linkage_exists(c4, {{0, 2}, {1, 3}}, {-1, -1}));
  EXPECT_FALSE(find_linkage(c4, TerminalSystem::plain({{0, 2}, {1, 3}})));
  const Graph k6 = fixture::complete(6);
  const auto ts = TerminalSystem::plain({{0, 3}, {1, 5}});
  ASSERT_TRUE(oracle::linkage_exists(k6, plain(ts), {-1, -1}));
  const auto l = find_linkage(k6, ts);
  ASSERT_TRUE(l);
  EXPECT_TRUE(validate_linkage(k6, ts, *l));
}

TEST(ParityLinkage, Examples) {
  const Graph c6 = fixture::cycle(6);
  EXPECT_FALSE(find_parity_linkage(c6, TerminalSystem::all_demanded({{0, 2}}, Parity::odd)));
  const Graph c5 = fixture::cycle(5);
  for (Parity p : {Parity::odd, Parity::even}) {
    const auto ts = TerminalSystem::all_demanded({{0, 2}}, p);
    const auto l = find_parity_linkage(c5, ts);
    ASSERT_TRUE(l);
    EXPECT_TRUE(validate_linkage(c5, ts, *l));
  }
}

TEST(ParityLinkage, NonParityLinkedFamily) {
  const auto gen = gen_non_parity_linked(2, 8);
  EXPECT_TRUE(find_linkage(gen.graph, gen.system));
  EXPECT_FALSE(find_parity_linkage(gen.graph, gen.system));
}

TEST(ParityLinkage, AgreesWithPathOracle) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 6 + static_cast<int>(seed % 4);
    const Graph g = oracle::random_graph(n, 0.3 + 0.05 * static_cast<double>(seed % 6), seed);
    const int k = 1 + static_cast<int>(seed % 3);
    std::vector<TerminalPair> pairs;
    for (int i = 0; i < k; ++i) pairs.push_back({2 * i, 2 * i + 1});
    TerminalSystem ts = TerminalSystem::plain(pairs);
    for (int i = 0; i < k; ++i) {
      if ((seed >> i) & 1U) continue;
      ts.parity_set.push_back(i);
      ts.demanded.push_back(((seed >> (i + 3)) & 1U) ? Parity::odd : Parity::even);
    }
    const auto plain_l = find_linkage(g, ts);
    const auto parity_l = find_parity_linkage(g, ts);
    ASSERT_EQ(plain_l.has_value(), oracle::linkage_exists(g, plain(ts), std::vector<int>(ts.pairs.size(), -1)));
    ASSERT_EQ(parity_l.has_value(), oracle::linkage_exists(g, plain(ts), parity_vector(ts))) << "seed " << seed;
    if (parity_l) {
      EXPECT_TRUE(plain_l);
      EXPECT_TRUE(validate_linkage(g, ts, *parity_l));
    }
    if (plain_l) EXPECT_TRUE(validate_linkage(g, ts, *plain_l, false));
  }
}

TEST(ParityLinkage, BipartiteParityIsForced) {
  const Graph g = fixture::complete_bipartite(4, 4);
  EXPECT_TRUE(find_parity_linkage(g, TerminalSystem::all_demanded({{0, 1}, {4, 5}}, Parity::even)));
  EXPECT_FALSE(find_parity_linkage(g, TerminalSystem::all_demanded({{0, 1}}, Parity::odd)));
  EXPECT_TRUE(find_parity_linkage(g, TerminalSystem::all_demanded({{0, 4}}, Parity::odd)));
}

TEST(Assembly, EmptyParitySet) {
  const Graph g = near_bipartite();
  const NicePartition np = canonical_nice_partition(g);
  const auto ts = TerminalSystem::plain({{2, 3}});
  const auto l = assemble_parity_paths(g, np, ts, {});
  ASSERT_TRUE(l);
  EXPECT_TRUE(validate_linkage(g, ts, *l, false));
}

// 2 and 3 share a side, so the natural parity is even and no matching edge is used.
TEST(Assembly, NaturalParity) {
  const Graph g = near_bipartite();
  const NicePartition np = canonical_nice_partition(g);
  ASSERT_EQ(np.inducing_cover.members, VertexSet({0}));
  const auto ts = TerminalSystem::all_demanded({{2, 3}}, Parity::even);
  const auto l = assemble_parity_paths(g, np, ts, Matching{{{0, 1}}, {0}});
  ASSERT_TRUE(l);
  EXPECT_TRUE(validate_linkage(g, ts, *l));
  EXPECT_TRUE(np.partition.part_b.contains(l->paths[0][1]));
  for (Vertex v : l->paths[0]) {
    EXPECT_NE(v, 0);
    EXPECT_NE(v, 1);
  }
}

// Odd demand with m_1 = (1,0), s_1 = 1: the path starts 1 0 0' and ends t' t.
TEST(Assembly, FlippedParityUsesMatchingEdge) {
  const Graph g = near_bipartite();
  const NicePartition np = canonical_nice_partition(g);
  const auto ts = TerminalSystem::all_demanded({{1, 3}}, Parity::odd);
  const auto l = assemble_parity_paths(g, np, ts, Matching{{{0, 1}}, {0}});
  ASSERT_TRUE(l);
  EXPECT_TRUE(validate_linkage(g, ts, *l));
  const auto& p = l->paths[0];
  EXPECT_EQ(p[0], 1);
  EXPECT_EQ(p[1], 0);
  EXPECT_TRUE(np.partition.part_b.contains(p[2]));
  EXPECT_EQ(p.back(), 3);
}

TEST(Assembly, RejectsInvalidMatching) {
  const Graph g = near_bipartite();
  const NicePartition np = canonical_nice_partition(g);
  const auto ts = TerminalSystem::all_demanded({{1, 3}}, Parity::odd);
  EXPECT_THROW(assemble_parity_paths(g, np, ts, Matching{{{1, 6}}, {0}}), PreconditionError);
}

TEST(DenseSubgraph, Examples) {
  EXPECT_FALSE(dense_subgraph(fixture::complete(8), 1));
  EXPECT_FALSE(dense_subgraph(fixture::path(12), 1));
  const auto k11 = dense_subgraph(fixture::complete(11), 1);
  ASSERT_TRUE(k11);
  EXPECT_EQ(k11->graph.order(), 11);
  const auto k12 = dense_subgraph(fixture::complete(12), 1);
  ASSERT_TRUE(k12);
  EXPECT_EQ(k12->graph.order(), 12);
  EXPECT_GE(k12->graph.size(), 60U);
}

TEST(DenseSubgraph, CertificateHolds) {
  // K12 with a long tail and a sparse side part.
  std::vector<Edge> e = fixture::complete(12).edges();
  for (int v = 12; v < 20; ++v) e.emplace_back(v - 1, v);
  const Graph g(20, e);
  const auto h = dense_subgraph(g, 1);
  ASSERT_TRUE(h);
  EXPECT_GE(h->graph.size(), 5U * static_cast<std::size_t>(h->graph.order()));
  EXPECT_GE(vertex_connectivity(h->graph), 2);
  for (Vertex v = 0; v < h->graph.order(); ++v) EXPECT_LT(h->parent(v), 12);
}

TEST(OddZPaths, Examples) {
  const auto none = odd_z_path_dichotomy(fixture::complete(4), {}, 1);
  EXPECT_FALSE(none.packed());
  ASSERT_TRUE(none.hitting_set);
  EXPECT_TRUE(none.hitting_set->empty());
  const Graph edge(2, {{0, 1}});
  const auto one = odd_z_path_dichotomy(edge, {0, 1}, 1);
  ASSERT_TRUE(one.packed());
  EXPECT_EQ(one.packing[0].vertices, (std::vector<Vertex>{0, 1}));
  EXPECT_THROW(odd_z_path_dichotomy(edge, {0, 1}, 0), InputError);
}

TEST(OddZPaths, AgreesWithPathOracle) {
  for (std::uint64_t seed = 0; seed < 250; ++seed) {
    const int n = 5 + static_cast<int>(seed % 4);
    const Graph g = oracle::random_graph(n, 0.35, seed);
    const std::uint64_t z = (seed * 0x9E3779B97F4A7C15ULL >> 17) & ((1U << n) - 1);
    const auto family = oracle::odd_z_paths(g, z);
    const int packable = oracle::max_disjoint(family);
    for (int ell = 1; ell <= 2; ++ell) {
      const auto cert = odd_z_path_dichotomy(g, fixture::from_mask(z), ell);
      ASSERT_EQ(cert.packed(), packable >= ell) << "seed " << seed;
      if (cert.packed()) {
        for (const auto& p : cert.packing) EXPECT_TRUE(is_odd_z_path(g, fixture::from_mask(z), p));
      } else {
        EXPECT_EQ(static_cast<int>(cert.hitting_set->size()), oracle::min_hitting_set(family));
        EXPECT_LE(static_cast<int>(cert.hitting_set->size()), 2 * ell - 2);
        EXPECT_FALSE(cert.violation);
      }
    }
  }
}
