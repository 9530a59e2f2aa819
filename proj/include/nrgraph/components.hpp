#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nrgraph/graph.hpp"
#include "nrgraph/weights.hpp"

namespace nrgraph {

/// Partition of the vertex set into connected components.
///
/// Components are numbered in order of their smallest vertex; members are
/// listed in ascending order. Each component carries a representative: the
/// member of largest weight, the smallest label among ties.
class ComponentView {
 public:
  std::size_t num_vertices() const { return component_id_.size(); }
  std::size_t num_components() const { return representative_.size(); }

  std::size_t component_of(Vertex v) const { return component_id_[v]; }
  std::span<const Vertex> members(std::size_t c) const {
    return {members_.data() + offsets_[c], members_.data() + offsets_[c + 1]};
  }
  std::size_t component_size(std::size_t c) const { return offsets_[c + 1] - offsets_[c]; }
  /// Position of v inside members(component_of(v)).
  std::size_t local_index(Vertex v) const { return local_index_[v]; }

  Vertex representative(std::size_t c) const { return representative_[c]; }
  /// One vertex per component (the set V_n^max), indexed by component.
  std::span<const Vertex> representatives() const { return representative_; }
  bool is_representative(Vertex v) const { return representative_[component_id_[v]] == v; }

 private:
  friend ComponentView components(const MultiGraph& g, const WeightVector& weights);

  std::vector<std::size_t> component_id_;
  std::vector<std::size_t> local_index_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> members_;
  std::vector<Vertex> representative_;
};

/// Union-find with path compression; loops and multiplicities are ignored.
/// Throws std::invalid_argument when weights.size() != g.num_vertices().
ComponentView components(const MultiGraph& g, const WeightVector& weights);

/// Graph distance from v to every vertex, or nullopt when unreachable.
/// Throws std::out_of_range for v >= n.
std::vector<std::optional<std::size_t>> bfs_layers(const MultiGraph& g, Vertex v);

}  // namespace nrgraph
