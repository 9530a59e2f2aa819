#include "nrgraph/components.hpp"

#include <algorithm>
#include <queue>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace nrgraph {
namespace {

// Flood fill over an adjacency matrix; labels are min-vertex ids.
std::vector<Vertex> flood_labels(const MultiGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<Vertex> label(n, static_cast<Vertex>(n));
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] != n) continue;
    std::queue<Vertex> queue;
    queue.push(s);
    label[s] = s;
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop();
      for (Vertex y = 0; y < n; ++y)
        if (label[y] == n && g.multiplicity(x, y) > 0) {
          label[y] = s;
          queue.push(y);
        }
    }
  }
  return label;
}

TEST(ComponentsTest, SmallExample) {
  // {0,3}, {1}, {2,4,5} plus a loop on 1.
  const auto g = MultiGraph::from_edges(6, {{3, 0, 1}, {2, 4, 2}, {5, 4, 1}, {1, 1, 1}});
  const WeightVector w({1.0, 5.0, 2.0, 3.0, 2.0, 0.5});
  const auto view = components(g, w);
  ASSERT_EQ(view.num_components(), 3u);
  EXPECT_EQ(view.component_of(0), 0u);
  EXPECT_EQ(view.component_of(1), 1u);
  EXPECT_EQ(view.component_of(5), 2u);
  EXPECT_EQ(view.component_size(2), 3u);
  const std::vector<Vertex> members(view.members(2).begin(), view.members(2).end());
  EXPECT_EQ(members, (std::vector<Vertex>{2, 4, 5}));
  EXPECT_EQ(view.local_index(4), 1u);
  EXPECT_EQ(view.representative(0), 3u);
  EXPECT_EQ(view.representative(1), 1u);
  // Tie between 2 and 4 goes to the smaller label.
  EXPECT_EQ(view.representative(2), 2u);
  EXPECT_TRUE(view.is_representative(2));
  EXPECT_FALSE(view.is_representative(4));
}

TEST(ComponentsTest, RejectsSizeMismatch) {
  const MultiGraph g(3);
  EXPECT_THROW(components(g, WeightVector({1.0, 1.0})), std::invalid_argument);
}

TEST(ComponentsTest, MatchesFloodFillOnRandomGraphs) {
  Rng rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + trial % 30;
    const double p = std::uniform_real_distribution<double>(0.0, 3.0 / static_cast<double>(n))(rng);
    const auto g = testing::random_small_graph(n, p, rng);
    std::vector<double> raw(n);
    // Few distinct weights so ties occur.
    for (auto& x : raw) x = 1.0 + static_cast<double>(rng() % 4);
    const WeightVector w(raw);
    const auto view = components(g, w);
    const auto label = flood_labels(g);

    std::vector<Vertex> roots(label);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    ASSERT_EQ(view.num_components(), roots.size());
    for (std::size_t c = 0; c < roots.size(); ++c) {
      std::vector<Vertex> expected;
      for (Vertex v = 0; v < n; ++v)
        if (label[v] == roots[c]) expected.push_back(v);
      const std::vector<Vertex> got(view.members(c).begin(), view.members(c).end());
      ASSERT_EQ(got, expected);
      Vertex best = expected.front();
      for (Vertex v : expected)
        if (w[v] > w[best]) best = v;
      ASSERT_EQ(view.representative(c), best);
      for (std::size_t i = 0; i < expected.size(); ++i) {
        ASSERT_EQ(view.component_of(expected[i]), c);
        ASSERT_EQ(view.local_index(expected[i]), i);
      }
    }
  }
}

TEST(BfsLayersTest, PathAndUnreachable) {
  const auto g = MultiGraph::from_edges(5, {{0, 1, 1}, {1, 2, 3}, {2, 2, 1}, {0, 2, 1}});
  const auto d = bfs_layers(g, 1);
  EXPECT_EQ(d[1], 0u);
  EXPECT_EQ(d[0], 1u);
  EXPECT_EQ(d[2], 1u);
  EXPECT_FALSE(d[3].has_value());
  EXPECT_FALSE(d[4].has_value());
  EXPECT_THROW(bfs_layers(g, 5), std::out_of_range);
}

TEST(BfsLayersTest, ExampleTreeDepths) {
  const auto d = bfs_layers(testing::wedge_example_graph(), 0);
  const std::vector<std::size_t> expected{0, 1, 1, 1, 1, 2, 2, 2, 2, 2, 3, 3};
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(d[i], expected[i]) << i;
}

}  // namespace
}  // namespace nrgraph
