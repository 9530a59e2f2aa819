#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nrgraph/components.hpp"
#include "nrgraph/graph.hpp"
#include "nrgraph/trees.hpp"

namespace nrgraph {

/// Raised when a terminal-tree count is requested on a component larger than
/// the configured cap.
class ComponentTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The vertex class counted inside the component of v.
class StatisticSpec {
 public:
  struct AllVertices {};
  struct DistanceM {
    std::size_t m;
  };
  struct DegreeM {
    std::size_t m;
  };
  struct TerminalTree {
    RootedTree tree;
    std::string canonical;
    std::uint64_t automorphisms;
  };
  using Kind = std::variant<AllVertices, DistanceM, DegreeM, TerminalTree>;

  static StatisticSpec all_vertices();
  /// m = 0 is accepted for counting (it selects v alone); xi() rejects it.
  static StatisticSpec distance(std::size_t m);
  /// Throws std::invalid_argument for m = 0.
  static StatisticSpec degree(std::size_t m);
  static StatisticSpec terminal_tree(RootedTree tree);

  /// "all", "distance:<m>", "degree:<m>", "tree:<parent array | AHU string>".
  static StatisticSpec parse(std::string_view text);
  /// Inverse of parse; trees are rendered in AHU form.
  std::string to_string() const;

  const Kind& kind() const { return kind_; }

 private:
  explicit StatisticSpec(Kind kind) : kind_(std::move(kind)) {}
  Kind kind_;
};

inline constexpr std::size_t kDefaultPathCap = 10'000;

/// Evaluates S_n(v) for many vertices of one graph, reusing scratch space so
/// each call costs time proportional to the component of v.
class StatisticEvaluator {
 public:
  StatisticEvaluator(const MultiGraph& g, const ComponentView& view, std::size_t path_cap = kDefaultPathCap);

  /// Throws std::out_of_range for v >= n and ComponentTooLarge for a
  /// terminal-tree count on a component above the cap.
  std::size_t count(Vertex v, const StatisticSpec& spec);

 private:
  std::size_t count_distance(Vertex v, std::size_t m);
  std::size_t count_degree(Vertex v, std::size_t m) const;
  std::size_t count_terminal_trees(Vertex v, const StatisticSpec::TerminalTree& pattern);

  const MultiGraph& graph_;
  const ComponentView& view_;
  std::size_t path_cap_;
  std::vector<std::size_t> distance_;
};

/// S_n(v) = |X_n(v)| for the class selected by spec:
///  - AllVertices: |C_n(v)|, v included.
///  - DistanceM(m): members at graph distance exactly m from v.
///  - DegreeM(m): members (v included) with exactly m distinct neighbours.
///  - TerminalTree(T): members x != v joined to v by exactly one path whose
///    descendants (everything reachable from x once its path predecessor is
///    removed) induce, with x as root, a copy of T.
/// Loops and multiplicities never matter.
std::size_t count_statistic(const MultiGraph& g, const ComponentView& view, Vertex v, const StatisticSpec& spec,
                            std::size_t path_cap = kDefaultPathCap);

/// Exhaustive terminal-tree count straight from the definition: enumerates
/// simple paths v -> x and tries every bijection onto T. Throws
/// ComponentTooLarge when the component of v has more than 12 vertices.
std::size_t brute_force_terminal_trees(const MultiGraph& g, Vertex v, const RootedTree& tree);

}  // namespace nrgraph
