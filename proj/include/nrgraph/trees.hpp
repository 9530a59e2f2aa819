#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nrgraph {

/// Rooted tree on vertices 0..m-1 with root 0 (1-based label 1 in text).
class RootedTree {
 public:
  /// parents[0] must be nullopt, every other entry a vertex id, and the
  /// parent links must reach the root without cycles. Throws
  /// std::invalid_argument otherwise.
  explicit RootedTree(std::vector<std::optional<std::size_t>> parents);

  static RootedTree single_vertex();
  /// "0 1 1 2": entry i (1-based) is the parent of vertex i, 0 marks the root,
  /// which must be vertex 1.
  static RootedTree parse_parent_array(std::string_view text);
  /// AHU string such as "(()())"; vertices are numbered in preorder.
  static RootedTree parse_canonical(std::string_view text);
  /// Dispatches on the first non-blank character: '(' selects the AHU form.
  static RootedTree parse(std::string_view text);

  std::size_t size() const { return parents_.size(); }
  std::optional<std::size_t> parent(std::size_t i) const { return parents_[i]; }
  const std::vector<std::size_t>& children(std::size_t i) const { return children_[i]; }
  const std::vector<std::vector<std::size_t>>& child_lists() const { return children_; }
  /// deg_T: number of children for the root, children + 1 otherwise.
  std::size_t degree(std::size_t i) const { return children_[i].size() + (i == 0 ? 0 : 1); }
  std::vector<std::size_t> degrees() const;

  std::string to_parent_array() const;

 private:
  std::vector<std::optional<std::size_t>> parents_;
  std::vector<std::vector<std::size_t>> children_;
};

/// AHU encoding of the subtree below `root`: a leaf is "()", an internal
/// node "(" + sorted child encodings + ")". Two rooted trees are
/// root-preserving isomorphic iff their encodings are equal.
std::string ahu_encode(const std::vector<std::vector<std::size_t>>& children, std::size_t root);

std::string canonical_form(const RootedTree& tree);

/// Order of the root-preserving automorphism group: the product over all
/// vertices of k! for every class of k identical child subtrees. Throws
/// std::overflow_error beyond 2^64 - 1.
std::uint64_t automorphism_count(const RootedTree& tree);

/// Every rooted tree with m vertices up to isomorphism, ordered by canonical
/// form. Exhaustive over parent arrays, so intended for m <= 9.
std::vector<RootedTree> all_rooted_trees(std::size_t m);

}  // namespace nrgraph
