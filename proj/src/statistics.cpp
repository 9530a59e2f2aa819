#include "nrgraph/statistics.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

namespace nrgraph {

namespace {

constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
constexpr std::size_t kBruteForceLimit = 12;

std::size_t parse_order(std::string_view text, std::string_view what) {
  std::size_t used = 0;
  long long value = -1;
  try {
    value = std::stoll(std::string(text), &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || value < 0)
    throw std::invalid_argument(fmt::format("statistic '{}': '{}' is not a non-negative integer", what, text));
  return static_cast<std::size_t>(value);
}

}  // namespace

StatisticSpec StatisticSpec::all_vertices() { return StatisticSpec(AllVertices{}); }

StatisticSpec StatisticSpec::distance(std::size_t m) { return StatisticSpec(DistanceM{m}); }

StatisticSpec StatisticSpec::degree(std::size_t m) {
  if (m == 0) throw std::invalid_argument("degree statistic needs m >= 1");
  return StatisticSpec(DegreeM{m});
}

StatisticSpec StatisticSpec::terminal_tree(RootedTree tree) {
  auto canonical = canonical_form(tree);
  const auto automorphisms = automorphism_count(tree);
  return StatisticSpec(TerminalTree{std::move(tree), std::move(canonical), automorphisms});
}

StatisticSpec StatisticSpec::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return std::string_view{};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
  };
  text = trim(text);
  const auto colon = text.find(':');
  const auto head = trim(text.substr(0, colon));
  const auto arg = colon == std::string_view::npos ? std::string_view{} : trim(text.substr(colon + 1));
  if (head == "all" && colon == std::string_view::npos) return all_vertices();
  if (head == "distance" && !arg.empty()) return distance(parse_order(arg, head));
  if (head == "degree" && !arg.empty()) return degree(parse_order(arg, head));
  if (head == "tree" && !arg.empty()) return terminal_tree(RootedTree::parse(arg));
  throw std::invalid_argument(fmt::format(
      "unknown statistic '{}' (expected all, distance:<m>, degree:<m> or tree:<parents|AHU>)", text));
}

std::string StatisticSpec::to_string() const {
  return std::visit(
      [](const auto& k) -> std::string {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, AllVertices>) return "all";
        if constexpr (std::is_same_v<T, DistanceM>) return fmt::format("distance:{}", k.m);
        if constexpr (std::is_same_v<T, DegreeM>) return fmt::format("degree:{}", k.m);
        if constexpr (std::is_same_v<T, TerminalTree>) return "tree:" + k.canonical;
      },
      kind_);
}

StatisticEvaluator::StatisticEvaluator(const MultiGraph& g, const ComponentView& view, std::size_t path_cap)
    : graph_(g), view_(view), path_cap_(path_cap), distance_(g.num_vertices(), kUnvisited) {
  if (view.num_vertices() != g.num_vertices())
    throw std::invalid_argument("StatisticEvaluator: component view does not match graph");
}

std::size_t StatisticEvaluator::count(Vertex v, const StatisticSpec& spec) {
  if (v >= graph_.num_vertices())
    throw std::out_of_range(fmt::format("vertex {} out of range (n = {})", v + 1, graph_.num_vertices()));
  return std::visit(
      [&](const auto& k) -> std::size_t {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, StatisticSpec::AllVertices>)
          return view_.component_size(view_.component_of(v));
        if constexpr (std::is_same_v<T, StatisticSpec::DistanceM>) return count_distance(v, k.m);
        if constexpr (std::is_same_v<T, StatisticSpec::DegreeM>) return count_degree(v, k.m);
        if constexpr (std::is_same_v<T, StatisticSpec::TerminalTree>) return count_terminal_trees(v, k);
      },
      spec.kind());
}

std::size_t StatisticEvaluator::count_distance(Vertex v, std::size_t m) {
  std::vector<Vertex> queue{v};
  distance_[v] = 0;
  std::size_t hits = m == 0 ? 1 : 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    if (distance_[u] >= m) continue;  // nothing beyond layer m is needed
    for (const auto& nb : graph_.neighbors(u)) {
      if (distance_[nb.vertex] != kUnvisited) continue;
      distance_[nb.vertex] = distance_[u] + 1;
      if (distance_[nb.vertex] == m) ++hits;
      queue.push_back(nb.vertex);
    }
  }
  for (Vertex u : queue) distance_[u] = kUnvisited;
  return hits;
}

std::size_t StatisticEvaluator::count_degree(Vertex v, std::size_t m) const {
  const auto members = view_.members(view_.component_of(v));
  return static_cast<std::size_t>(
      std::count_if(members.begin(), members.end(), [&](Vertex x) { return graph_.neighbors(x).size() == m; }));
}

std::size_t StatisticEvaluator::count_terminal_trees(Vertex v, const StatisticSpec::TerminalTree& pattern) {
  const std::size_t c = view_.component_of(v);
  const auto members = view_.members(c);
  const std::size_t k = members.size();
  if (k > path_cap_)
    throw ComponentTooLarge(fmt::format("component of vertex {} has {} vertices, above the terminal-tree cap {}",
                                        v + 1, k, path_cap_));
  const std::size_t m = pattern.tree.size();
  if (k < m + 1) return 0;

  // Iterative DFS from v over local ids. x has a unique path from v iff every
  // tree edge on its DFS path is a bridge; its descendants are then exactly
  // its DFS subtree, a contiguous preorder range.
  std::vector<std::size_t> entry(k, kUnvisited), low(k), parent(k, kUnvisited), subtree(k, 1), degree_sum(k);
  std::vector<std::size_t> preorder;
  preorder.reserve(k);
  std::vector<std::pair<std::size_t, std::size_t>> stack;  // (local id, next neighbor slot)
  const std::size_t root = view_.local_index(v);
  entry[root] = low[root] = 0;
  preorder.push_back(root);
  stack.emplace_back(root, 0);
  while (!stack.empty()) {
    auto& [u, slot] = stack.back();
    const auto row = graph_.neighbors(members[u]);
    if (slot < row.size()) {
      const std::size_t w = view_.local_index(row[slot++].vertex);
      if (entry[w] == kUnvisited) {
        entry[w] = low[w] = preorder.size();
        parent[w] = u;
        preorder.push_back(w);
        stack.emplace_back(w, 0);
      } else if (w != parent[u]) {
        low[u] = std::min(low[u], entry[w]);
      }
      continue;
    }
    const std::size_t done = u;
    degree_sum[done] += row.size();
    stack.pop_back();
    if (parent[done] != kUnvisited) {
      const std::size_t p = parent[done];
      low[p] = std::min(low[p], low[done]);
      subtree[p] += subtree[done];
      degree_sum[p] += degree_sum[done];
    }
  }

  std::vector<char> unique_path(k, 0);
  unique_path[root] = 1;
  std::size_t hits = 0;
  std::vector<std::vector<std::size_t>> children(m);
  std::vector<std::size_t> position(k, kUnvisited);
  for (std::size_t i = 1; i < preorder.size(); ++i) {
    const std::size_t x = preorder[i];
    const std::size_t p = parent[x];
    unique_path[x] = unique_path[p] && low[x] > entry[p];
    // One edge (the bridge to p) leaves the subtree; a tree on m vertices has
    // m - 1 internal edges.
    if (!unique_path[x] || subtree[x] != m || degree_sum[x] != 2 * m - 1) continue;
    for (auto& row : children) row.clear();
    for (std::size_t j = 0; j < m; ++j) position[preorder[entry[x] + j]] = j;
    for (std::size_t j = 1; j < m; ++j) {
      const std::size_t y = preorder[entry[x] + j];
      children[position[parent[y]]].push_back(j);
    }
    if (ahu_encode(children, 0) == pattern.canonical) ++hits;
  }
  return hits;
}

std::size_t count_statistic(const MultiGraph& g, const ComponentView& view, Vertex v, const StatisticSpec& spec,
                            std::size_t path_cap) {
  StatisticEvaluator evaluator(g, view, path_cap);
  return evaluator.count(v, spec);
}

namespace {

/// Number of simple paths from `from` to `to`, stopping at `limit`. Records
/// the predecessor of `to` on the first path found.
void count_simple_paths(const MultiGraph& g, Vertex from, Vertex to, std::vector<char>& on_path, std::size_t& found,
                        std::size_t limit, Vertex& predecessor) {
  if (from == to) {
    ++found;
    return;
  }
  on_path[from] = 1;
  for (const auto& nb : g.neighbors(from)) {
    if (found >= limit) break;
    if (on_path[nb.vertex]) continue;
    const std::size_t before = found;
    count_simple_paths(g, nb.vertex, to, on_path, found, limit, predecessor);
    if (nb.vertex == to && found > before && found == 1) predecessor = from;
  }
  on_path[from] = 0;
}

bool adjacent(const MultiGraph& g, Vertex a, Vertex b) { return a != b && g.multiplicity(a, b) > 0; }

}  // namespace

std::size_t brute_force_terminal_trees(const MultiGraph& g, Vertex v, const RootedTree& tree) {
  if (v >= g.num_vertices()) throw std::out_of_range("brute_force_terminal_trees: vertex out of range");
  const auto distance = bfs_layers(g, v);
  std::vector<Vertex> component;
  for (Vertex x = 0; x < g.num_vertices(); ++x)
    if (distance[x]) component.push_back(x);
  if (component.size() > kBruteForceLimit)
    throw ComponentTooLarge(fmt::format("brute force limited to {} vertices, component has {}", kBruteForceLimit,
                                        component.size()));

  const std::size_t m = tree.size();
  std::vector<std::pair<std::size_t, std::size_t>> tree_edges;
  for (std::size_t i = 1; i < m; ++i) tree_edges.emplace_back(*tree.parent(i), i);

  std::size_t hits = 0;
  std::vector<char> on_path(g.num_vertices(), 0);
  for (Vertex x : component) {
    if (x == v) continue;
    std::size_t paths = 0;
    Vertex predecessor = x;
    count_simple_paths(g, v, x, on_path, paths, 2, predecessor);
    if (paths != 1) continue;

    // Descendants: reachable from x without entering the predecessor.
    std::vector<Vertex> subgraph{x};
    std::vector<char> seen(g.num_vertices(), 0);
    seen[x] = seen[predecessor] = 1;
    for (std::size_t head = 0; head < subgraph.size(); ++head)
      for (const auto& nb : g.neighbors(subgraph[head]))
        if (!seen[nb.vertex]) {
          seen[nb.vertex] = 1;
          subgraph.push_back(nb.vertex);
        }
    if (subgraph.size() != m) continue;

    std::size_t induced_edges = 0;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b) induced_edges += adjacent(g, subgraph[a], subgraph[b]);
    if (induced_edges != m - 1) continue;

    // Try every map of tree vertices 1..m-1 onto the other subgraph vertices.
    std::vector<Vertex> image(subgraph.begin() + 1, subgraph.end());
    std::sort(image.begin(), image.end());
    bool isomorphic = false;
    do {
      auto at = [&](std::size_t i) { return i == 0 ? x : image[i - 1]; };
      isomorphic = std::all_of(tree_edges.begin(), tree_edges.end(),
                               [&](const auto& e) { return adjacent(g, at(e.first), at(e.second)); });
    } while (!isomorphic && std::next_permutation(image.begin(), image.end()));
    if (isomorphic) ++hits;
  }
  return hits;
}

}  // namespace nrgraph
