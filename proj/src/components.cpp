#include "nrgraph/components.hpp"

#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

namespace nrgraph {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    std::size_t root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      const std::size_t next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);

}  // namespace

ComponentView components(const MultiGraph& g, const WeightVector& weights) {
  const std::size_t n = g.num_vertices();
  if (weights.size() != n)
    throw std::invalid_argument(
        fmt::format("components: {} weights for a graph on {} vertices", weights.size(), n));

  DisjointSets sets(n);
  for (Vertex u = 0; u < n; ++u)
    for (const auto& nb : g.neighbors(u))
      if (nb.vertex > u) sets.unite(u, nb.vertex);

  ComponentView view;
  view.component_id_.assign(n, kUnassigned);
  std::vector<std::size_t> root_to_component(n, kUnassigned);
  std::vector<std::size_t> counts;
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t root = sets.find(v);
    if (root_to_component[root] == kUnassigned) {
      root_to_component[root] = counts.size();
      counts.push_back(0);
      view.representative_.push_back(v);
    }
    const std::size_t c = root_to_component[root];
    view.component_id_[v] = c;
    ++counts[c];
    // Strict comparison in ascending label order keeps the smallest maximizer.
    if (weights[v] > weights[view.representative_[c]]) view.representative_[c] = v;
  }

  view.offsets_.assign(counts.size() + 1, 0);
  for (std::size_t c = 0; c < counts.size(); ++c) view.offsets_[c + 1] = view.offsets_[c] + counts[c];
  view.members_.resize(n);
  view.local_index_.resize(n);
  std::vector<std::size_t> cursor(view.offsets_.begin(), view.offsets_.end() - 1);
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t c = view.component_id_[v];
    view.local_index_[v] = cursor[c] - view.offsets_[c];
    view.members_[cursor[c]++] = v;
  }
  return view;
}

std::vector<std::optional<std::size_t>> bfs_layers(const MultiGraph& g, Vertex v) {
  const std::size_t n = g.num_vertices();
  if (v >= n) throw std::out_of_range(fmt::format("bfs_layers: vertex {} out of range (n = {})", v + 1, n));
  std::vector<std::optional<std::size_t>> distance(n);
  std::vector<Vertex> queue{v};
  distance[v] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (const auto& nb : g.neighbors(u)) {
      if (distance[nb.vertex]) continue;
      distance[nb.vertex] = *distance[u] + 1;
      queue.push_back(nb.vertex);
    }
  }
  return distance;
}

}  // namespace nrgraph
