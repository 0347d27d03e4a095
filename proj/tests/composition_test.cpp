#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "oddcycle/composition.hpp"
#include "oddcycle/error.hpp"

using namespace oddcycle;
using K = std::vector<unsigned>;

TEST(Composition, FromR) {
  const auto c = OddCycleComposition::from_r({1, 1, 1});
  EXPECT_EQ(c.num_cycles(), 3u);
  EXPECT_EQ(c.k_sum(), 6u);
  EXPECT_EQ(c.k(), (K{3, 2, 1}));

  const auto triangles = OddCycleComposition::from_r({3});
  EXPECT_EQ(triangles.k(), (K{1, 1, 1}));
  EXPECT_EQ(triangles.k_sum(), 3u);

  const auto seven = OddCycleComposition::from_r({0, 0, 1});
  EXPECT_EQ(seven.num_cycles(), 1u);
  EXPECT_EQ(seven.k_sum(), 3u);
  EXPECT_EQ(seven.k(), (K{3}));
}

TEST(Composition, FromRTrimsTrailingZerosKeepsInteriorOnes) {
  const auto c = OddCycleComposition::from_r({1, 0, 1, 0, 0});
  EXPECT_EQ(c.r(), (K{1, 0, 1}));
  EXPECT_EQ(c.k(), (K{3, 1}));
}

TEST(Composition, EmptyRThrows) {
  EXPECT_THROW(OddCycleComposition::from_r({}), InvalidInput);
  EXPECT_THROW(OddCycleComposition::from_r({0, 0}), InvalidInput);
}

TEST(Composition, FromK) {
  const auto c = OddCycleComposition::from_k({3, 2, 1});
  EXPECT_EQ(c.r(), (K{1, 1, 1}));
  EXPECT_EQ(c.num_cycles(), 3u);
  EXPECT_EQ(c.k_sum(), 6u);

  const auto tri = OddCycleComposition::from_k({1});
  EXPECT_EQ(tri.r(), (K{1}));
  EXPECT_EQ(tri.k_sum(), 1u);

  const auto fives = OddCycleComposition::from_k({2, 2});
  EXPECT_EQ(fives.r(), (K{0, 2}));
  EXPECT_EQ(fives.k_sum(), 4u);
}

TEST(Composition, FromKPreservesOrder) {
  EXPECT_EQ(OddCycleComposition::from_k({1, 3, 2}).k(), (K{1, 3, 2}));
  EXPECT_EQ(OddCycleComposition::from_k({1, 3, 2}).canonical().k(), (K{3, 2, 1}));
}

TEST(Composition, FromKRejectsZero) {
  EXPECT_THROW(OddCycleComposition::from_k({2, 0}), InvalidInput);
  EXPECT_THROW(OddCycleComposition::from_k({}), InvalidInput);
}

TEST(Composition, FlatIndexing) {
  const auto c = OddCycleComposition::from_k({3, 2, 1});
  EXPECT_EQ(c.edge_index(1, 1), 0u);
  EXPECT_EQ(c.edge_index(1, 7), 6u);
  EXPECT_EQ(c.edge_index(2, 1), 7u);
  EXPECT_EQ(c.edge_index(3, 3), 14u);
  for (std::size_t i = 0; i < c.num_edges(); ++i) {
    const EdgeLabel l = c.label(i);
    EXPECT_EQ(c.edge_index(l.cycle, l.position), i);
  }
  EXPECT_EQ(to_string(c.label(9)), "x2,3");
  EXPECT_THROW(c.edge_index(1, 8), InvalidInput);
  EXPECT_THROW(c.label(15), InvalidInput);
}

TEST(LabeledGraph, Sizes) {
  const auto tri = labeled_graph(OddCycleComposition::from_k({1}));
  EXPECT_EQ(tri.num_vertices(), 3u);
  EXPECT_EQ(tri.num_edges(), 3u);

  const auto g = labeled_graph(OddCycleComposition::from_k({3, 2, 1}));
  EXPECT_EQ(g.num_vertices(), 13u);
  EXPECT_EQ(g.num_edges(), 15u);

  const auto two = labeled_graph(OddCycleComposition::from_k({1, 1}));
  EXPECT_EQ(two.num_vertices(), 5u);
  EXPECT_EQ(two.num_edges(), 6u);
}

TEST(LabeledGraph, EndpointsFollowLabeling) {
  const auto c = OddCycleComposition::from_k({2, 1});
  const auto g = labeled_graph(c);
  // Cycle 1: u - u1^1 - u1^2 - u1^3 - u1^4 - u
  const auto& e = g.edges;
  EXPECT_EQ(g.vertex_names[e[0].a], "u");
  EXPECT_EQ(g.vertex_names[e[0].b], "u1^1");
  EXPECT_EQ(g.vertex_names[e[1].a], "u1^1");
  EXPECT_EQ(g.vertex_names[e[1].b], "u1^2");
  EXPECT_EQ(g.vertex_names[e[4].a], "u1^4");
  EXPECT_EQ(g.vertex_names[e[4].b], "u");
  EXPECT_EQ(e[5].label, (EdgeLabel{2, 1}));
}

TEST(CycleParts, Examples) {
  const auto c = OddCycleComposition::from_k({3, 2, 1});
  const auto p1 = cycle_parts(c, 1);
  EXPECT_EQ(p1.odd, (std::vector<std::size_t>{0, 2, 4, 6}));
  EXPECT_EQ(p1.even, (std::vector<std::size_t>{1, 3, 5}));
  const auto p3 = cycle_parts(c, 3);
  EXPECT_EQ(p3.odd, (std::vector<std::size_t>{c.edge_index(3, 1), c.edge_index(3, 3)}));
  EXPECT_EQ(p3.even, (std::vector<std::size_t>{c.edge_index(3, 2)}));
  EXPECT_THROW(cycle_parts(c, 0), InvalidInput);
  EXPECT_THROW(cycle_parts(c, 4), InvalidInput);
}

TEST(CompositionProperty, GraphInvariants) {
  std::mt19937 rng(42);
  std::uniform_int_distribution<unsigned> len(1, 5), val(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    K k(len(rng));
    for (auto& x : k) x = val(rng);
    const auto c = OddCycleComposition::from_k(k);
    const unsigned n = c.num_cycles();
    const unsigned big_n = c.k_sum();
    ASSERT_GE(big_n, n);

    std::size_t edge_sum = 0;
    for (auto ki : k) edge_sum += 2 * ki + 1;
    EXPECT_EQ(edge_sum, c.num_edges());

    const auto g = labeled_graph(c);
    EXPECT_EQ(g.num_vertices(), 2 * big_n + 1);
    EXPECT_EQ(g.num_edges(), 2 * big_n + n);
    std::vector<unsigned> degree(g.num_vertices(), 0);
    for (const auto& e : g.edges) {
      ++degree[e.a];
      ++degree[e.b];
    }
    EXPECT_EQ(degree[0], 2 * n);
    for (std::size_t v = 1; v < degree.size(); ++v) EXPECT_EQ(degree[v], 2u);

    for (unsigned i = 1; i <= n; ++i) {
      const auto p = cycle_parts(c, i);
      EXPECT_EQ(p.odd.size(), k[i - 1] + 1);
      EXPECT_EQ(p.even.size(), k[i - 1]);
    }

    // r round trip through the canonical k-sequence.
    const auto again = OddCycleComposition::from_k(OddCycleComposition::from_r(c.r()).k());
    EXPECT_EQ(again.r(), c.r());
  }
}
