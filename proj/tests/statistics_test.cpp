#include "nrgraph/statistics.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace nrgraph {
namespace {

constexpr std::size_t kFar = 1'000'000;

// All-pairs distances by Floyd-Warshall on the simple adjacency matrix.
std::vector<std::vector<std::size_t>> floyd(const MultiGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, kFar));
  for (Vertex x = 0; x < n; ++x) {
    d[x][x] = 0;
    for (Vertex y = 0; y < n; ++y)
      if (x != y && g.multiplicity(x, y) > 0) d[x][y] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

std::size_t matrix_degree(const MultiGraph& g, Vertex x) {
  std::size_t deg = 0;
  for (Vertex y = 0; y < g.num_vertices(); ++y) deg += (x != y && g.multiplicity(x, y) > 0);
  return deg;
}

std::size_t count(const MultiGraph& g, Vertex v, const StatisticSpec& spec) {
  std::vector<double> ones(g.num_vertices(), 1.0);
  const auto view = components(g, WeightVector(ones));
  return count_statistic(g, view, v, spec);
}

MultiGraph simple_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::vector<Edge> edges;
  for (auto [a, b] : pairs) edges.push_back({a, b, 1});
  return MultiGraph::from_edges(n, std::move(edges));
}

TEST(StatisticSpecTest, ParseAndPrint) {
  for (const char* text : {"all", "distance:2", "degree:3", "tree:(()())", "distance:0"})
    EXPECT_EQ(StatisticSpec::parse(text).to_string(), text);
  EXPECT_EQ(StatisticSpec::parse("tree:0 1 1").to_string(), "tree:(()())");
  const auto tree = StatisticSpec::parse("tree:0 1 1 1");
  const auto& pattern = std::get<StatisticSpec::TerminalTree>(tree.kind());
  EXPECT_EQ(pattern.automorphisms, 6u);
  for (const char* bad : {"", "every", "distance:", "distance:x", "degree:0", "tree:", "tree:0 0", "distance:-1"})
    EXPECT_THROW(StatisticSpec::parse(bad), std::invalid_argument) << bad;
  EXPECT_THROW(StatisticSpec::degree(0), std::invalid_argument);
}

TEST(TerminalTreeTest, WedgeExample) {
  const auto g = testing::wedge_example_graph();
  const auto cherry = StatisticSpec::terminal_tree(RootedTree::parse("0 1 1"));
  EXPECT_EQ(count(g, 0, cherry), 2u);
  EXPECT_EQ(count(g, 0, StatisticSpec::terminal_tree(RootedTree::single_vertex())), 7u);
  // The subtree at v4: root with a leaf and a cherry.
  EXPECT_EQ(count(g, 0, StatisticSpec::terminal_tree(RootedTree::parse("0 1 1 3 3"))), 1u);
  // v itself never counts, even though the whole tree hangs from it.
  EXPECT_EQ(count(g, 0, StatisticSpec::terminal_tree(RootedTree::parse("0 1 1 1 1 3 4 4 5 5 10 10"))), 0u);
}

TEST(TerminalTreeTest, PathOracle) {
  // Path 0-1-2-3-4. From v = 0, x = k carries a path of 5 - k vertices.
  const auto g = simple_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  for (std::size_t len = 1; len <= 5; ++len) {
    std::string parents = "0";
    for (std::size_t i = 1; i < len; ++i) parents += " " + std::to_string(i);
    const auto spec = StatisticSpec::terminal_tree(RootedTree::parse(parents));
    EXPECT_EQ(count(g, 0, spec), len <= 4 ? 1u : 0u) << len;
    // From the middle vertex both arms are paths of 2 vertices.
    EXPECT_EQ(count(g, 2, spec), len == 2 ? 2u : (len == 1 ? 2u : 0u)) << len;
  }
}

TEST(TerminalTreeTest, CycleBlocksUniqueness) {
  // Triangle 0-1-2 with a pendant 3 on vertex 2 and a pendant 4 on vertex 0.
  const auto g = simple_graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {0, 4}});
  const auto single = StatisticSpec::terminal_tree(RootedTree::single_vertex());
  // Leaf 3 is reached by two paths from 0; leaf 4 by one.
  EXPECT_EQ(count(g, 0, single), 1u);
  // From 3 the leaf 4 is reached around either side of the triangle.
  EXPECT_EQ(count(g, 3, single), 0u);
  // From 4 the only unique path ends at 0, whose descendants hold a cycle.
  EXPECT_EQ(count(g, 4, StatisticSpec::terminal_tree(RootedTree::parse("0 1 1"))), 0u);
}

TEST(TerminalTreeTest, LoopsAndMultiplicitiesIgnored) {
  const auto g = MultiGraph::from_edges(3, {{0, 1, 3}, {1, 2, 1}, {2, 2, 2}});
  EXPECT_EQ(count(g, 0, StatisticSpec::terminal_tree(RootedTree::parse("0 1"))), 1u);
  EXPECT_EQ(count(g, 0, StatisticSpec::terminal_tree(RootedTree::single_vertex())), 1u);
}

TEST(TerminalTreeTest, CapRaisesComponentTooLarge) {
  const auto g = testing::wedge_example_graph();
  const auto view = components(g, WeightVector(std::vector<double>(12, 1.0)));
  const auto spec = StatisticSpec::terminal_tree(RootedTree::single_vertex());
  EXPECT_THROW(count_statistic(g, view, 0, spec, 11), ComponentTooLarge);
  EXPECT_EQ(count_statistic(g, view, 0, spec, 12), 7u);
  // Other statistics ignore the cap.
  EXPECT_EQ(count_statistic(g, view, 0, StatisticSpec::all_vertices(), 1), 12u);
}

TEST(TerminalTreeTest, MatchesBruteForceOnRandomGraphs) {
  Rng rng(23);
  std::vector<RootedTree> patterns;
  for (std::size_t m = 1; m <= 4; ++m)
    for (auto& t : all_rooted_trees(m)) patterns.push_back(std::move(t));
  std::size_t nonzero = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const double p = std::uniform_real_distribution<double>(0.5, 2.5)(rng) / static_cast<double>(n);
    const auto g = testing::random_small_graph(n, p, rng);
    const auto view = components(g, WeightVector(std::vector<double>(n, 1.0)));
    StatisticEvaluator evaluator(g, view);
    for (Vertex v = 0; v < n; ++v)
      for (const auto& t : patterns) {
        const auto fast = evaluator.count(v, StatisticSpec::terminal_tree(t));
        ASSERT_EQ(fast, brute_force_terminal_trees(g, v, t)) << "trial " << trial << " v " << v << " T "
                                                             << t.to_parent_array();
        nonzero += fast > 0;
      }
  }
  EXPECT_GT(nonzero, 1000u);
}

TEST(DistanceAndDegreeTest, MatchMatrixOracles) {
  Rng rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 25;
    const double p = std::uniform_real_distribution<double>(0.3, 2.0)(rng) / static_cast<double>(n);
    const auto g = testing::random_small_graph(n, p, rng);
    const auto d = floyd(g);
    const auto view = components(g, WeightVector(std::vector<double>(n, 1.0)));
    StatisticEvaluator evaluator(g, view);
    for (Vertex v = 0; v < n; ++v) {
      std::size_t total = 0;
      for (std::size_t m = 0; m <= n; ++m) {
        std::size_t expected = 0;
        for (Vertex x = 0; x < n; ++x) expected += d[v][x] == m;
        const auto got = evaluator.count(v, StatisticSpec::distance(m));
        ASSERT_EQ(got, expected);
        total += got;
      }
      // Layers partition the component.
      ASSERT_EQ(total, evaluator.count(v, StatisticSpec::all_vertices()));
      ASSERT_EQ(evaluator.count(v, StatisticSpec::distance(1)), matrix_degree(g, v));
      for (std::size_t m = 1; m <= 4; ++m) {
        std::size_t expected = 0;
        for (Vertex x = 0; x < n; ++x) expected += d[v][x] < kFar && matrix_degree(g, x) == m;
        ASSERT_EQ(evaluator.count(v, StatisticSpec::degree(m)), expected);
      }
    }
  }
}

TEST(DegreeTest, LeavesOfTreeComponents) {
  // On a tree component the single-vertex terminal trees are the leaves other than v.
  const auto g = testing::wedge_example_graph();
  const auto single = StatisticSpec::terminal_tree(RootedTree::single_vertex());
  for (Vertex v = 0; v < 12; ++v) {
    const std::size_t leaves = count(g, v, StatisticSpec::degree(1));
    EXPECT_EQ(count(g, v, single), leaves - (degree(g, v) == 1 ? 1 : 0)) << v;
  }
}

TEST(StatisticEvaluatorTest, OutOfRange) {
  const auto g = simple_graph(2, {{0, 1}});
  const auto view = components(g, WeightVector({1.0, 1.0}));
  StatisticEvaluator evaluator(g, view);
  EXPECT_THROW(evaluator.count(2, StatisticSpec::all_vertices()), std::out_of_range);
  EXPECT_EQ(evaluator.count(1, StatisticSpec::all_vertices()), 2u);
  EXPECT_EQ(evaluator.count(1, StatisticSpec::distance(0)), 1u);
}

}  // namespace
}  // namespace nrgraph
