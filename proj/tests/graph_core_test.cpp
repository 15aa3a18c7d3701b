#include <gtest/gtest.h>

#include "perm4/generators.hpp"
#include "perm4/graph.hpp"

namespace perm4 {
namespace {

UndirectedGraph cycle4() { return UndirectedGraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
UndirectedGraph k4() { return UndirectedGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

LayeredMultigraph layered_cycle(std::uint64_t first_mult) {
  return LayeredMultigraph({1, 1, 1, 1}, {{0, 0, 0, first_mult}, {1, 0, 0, 1}, {2, 0, 0, 1}, {3, 0, 0, 1}});
}

TEST(Graphs, RejectInvalidInput) {
  EXPECT_THROW(UndirectedGraph(2, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(UndirectedGraph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(UndirectedGraph(2, {{0, 2}}), std::invalid_argument);
  EXPECT_THROW(DirectedGraph(2, {{0, 1}, {0, 1}}), std::invalid_argument);
  EXPECT_NO_THROW(DirectedGraph(2, {{0, 1}, {1, 0}}));
  EXPECT_THROW(LayeredMultigraph({1, 1, 1, 1}, {{4, 0, 0, 1}}), std::invalid_argument);
  EXPECT_THROW(LayeredMultigraph({1, 0, 1, 1}, {{0, 0, 0, 1}}), std::invalid_argument);
  EXPECT_THROW(LayeredMultigraph({1, 1, 1, 1}, {{0, 0, 0, 0}}), std::invalid_argument);
  EXPECT_THROW(LayeredMultigraph({1, 1, 1, 1}, {{0, 0, 0, 1}, {0, 0, 0, 2}}), std::invalid_argument);
}

TEST(BruteC4, Examples) {
  EXPECT_EQ(brute_count_c4(cycle4()), Count{1});
  EXPECT_EQ(brute_count_c4(k4()), Count{3});
  EXPECT_EQ(brute_count_c4(layered_cycle(3)), Count{3});
  EXPECT_EQ(brute_count_c4(DirectedGraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})), Count{1});
  EXPECT_EQ(brute_count_c4(DirectedGraph(2, {{0, 1}, {1, 0}})), Count{0});
}

TEST(CountC4Undirected, Examples) {
  EXPECT_EQ(count_c4_undirected(cycle4()), Count{1});
  EXPECT_EQ(count_c4_undirected(k4()), Count{3});
  EXPECT_EQ(count_c4_undirected(UndirectedGraph(0, {})), Count{0});
  EXPECT_EQ(codegree_pair_sum(k4()), Count{6});
}

TEST(CountC4Undirected, RandomGraphs) {
  const Probability densities[] = {{1, 10}, {1, 4}, {1, 2}, {3, 4}, {1, 1}};
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = random_graph(static_cast<NodeId>(seed % 31), densities[seed % 5], seed);
    const Count want = brute_count_c4(g);
    ASSERT_EQ(count_c4_undirected(g), want) << seed;
    const Count pairs = codegree_pair_sum(g);
    ASSERT_EQ(pairs % 2, Count{0});
    ASSERT_EQ(pairs / 2, want);
  }
}

TEST(CountC4Undirected, IsolatedNodesIrrelevant) {
  const auto g = random_graph(15, {1, 2}, 4);
  const UndirectedGraph bigger(g.node_count() + 3, g.edges());
  EXPECT_EQ(count_c4_undirected(bigger), count_c4_undirected(g));
  EXPECT_EQ(brute_count_c4(bigger), brute_count_c4(g));
}

TEST(CountC4Layered, Examples) {
  EXPECT_EQ(count_c4_layered(layered_cycle(3)), Count{3});
  EXPECT_EQ(count_c4_layered_by_paths(layered_cycle(3)), Count{3});
  const LayeredMultigraph no_v1({2, 0, 2, 2}, {{2, 0, 1, 1}, {3, 1, 0, 4}});
  EXPECT_EQ(count_c4_layered(no_v1), Count{0});
  EXPECT_EQ(count_c4_layered(LayeredMultigraph()), Count{0});
}

TEST(CountC4Layered, RandomMultigraphs) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    SplitMix64 rng(seed);
    std::array<NodeId, 4> sizes{};
    for (auto& s : sizes) s = static_cast<NodeId>(rng.below(9));
    const auto g = random_layered(sizes, {1 + rng.below(4), 4}, 7, seed);
    const Count want = brute_count_c4(g);
    ASSERT_EQ(count_c4_layered(g), want) << seed;
    ASSERT_EQ(count_c4_layered_by_paths(g), want) << seed;
  }
}

TEST(CountC4Layered, LargeMultiplicities) {
  const auto g = LayeredMultigraph({1, 1, 1, 1}, {{0, 0, 0, 1ull << 40}, {1, 0, 0, 1ull << 40}, {2, 0, 0, 3}, {3, 0, 0, 5}});
  EXPECT_EQ(count_c4_layered(g), (Count{1} << 80) * 15);
}

}  // namespace
}  // namespace perm4
