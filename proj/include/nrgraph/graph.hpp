#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nrgraph/weights.hpp"

namespace nrgraph {

/// Vertices are 0-based in memory; files and user-facing output use 1-based
/// labels.
using Vertex = std::uint32_t;

struct Neighbor {
  Vertex vertex;
  std::uint32_t multiplicity;
  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

/// One undirected edge class {u, v} with its multiplicity; u == v is a loop.
struct Edge {
  Vertex u;
  Vertex v;
  std::uint32_t multiplicity;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected multigraph with loops, stored as compressed adjacency rows
/// sorted by neighbor id. Immutable once built.
class MultiGraph {
 public:
  explicit MultiGraph(std::size_t n = 0);

  /// Builds a graph from an unordered edge list. Repeated {u, v} entries are
  /// summed; zero multiplicities are dropped. Throws std::out_of_range on an
  /// endpoint >= n.
  static MultiGraph from_edges(std::size_t n, std::vector<Edge> edges);

  std::size_t num_vertices() const { return loops_.size(); }
  /// Σ_{x<y} multiplicity(x, y) + Σ_x loops(x).
  std::uint64_t edge_total() const { return edge_total_; }

  /// Non-loop neighbors of v, ascending by id.
  std::span<const Neighbor> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::uint32_t loops(Vertex v) const { return loops_[v]; }
  /// O(log d) lookup; multiplicity(v, v) is the loop count.
  std::uint32_t multiplicity(Vertex u, Vertex v) const;

  bool is_simple() const;
  /// All edge classes with u <= v, sorted.
  std::vector<Edge> edges() const;

  /// Re-checks symmetry, ordering, and the edge_total identity. Throws
  /// std::logic_error naming the first violation.
  void audit() const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
  std::vector<std::uint32_t> loops_;
  std::uint64_t edge_total_ = 0;
};

enum class ModelKind { NR, ENR, CL, GRG };
/// Ln: p_ij = W_i W_j / L_n. NEW: p'_ij = W_i W_j / (n E[W]).
enum class Normalizer { Ln, NEW };

struct GraphModel {
  ModelKind kind = ModelKind::ENR;
  Normalizer normalizer = Normalizer::Ln;
};

std::string_view to_string(ModelKind kind);
std::string_view to_string(Normalizer normalizer);
/// Accepts "NR", "ENR", "CL", "GRG" (case-insensitive). Throws
/// std::invalid_argument otherwise.
ModelKind parse_model_kind(std::string_view text);
/// Accepts "Ln" and "nEW" (case-insensitive).
Normalizer parse_normalizer(std::string_view text);

/// D in p_ij = W_i W_j / D. NEW uses the model's analytic mean.
double edge_denominator(const WeightVector& weights, Normalizer normalizer, const WeightModel& model);

/// Connection probability of a simple model as a function of p = W_i W_j / D:
/// ENR 1 - e^{-p}, CL min(1, p), GRG p / (1 + p). Throws for NR.
double edge_probability(ModelKind kind, double p);

/// Norros-Reittu multigraph: E{x,y} ~ Poisson(W_x W_y / D) for x < y and
/// loops ~ Poisson(W_x^2 / D), all independent.
///
/// Draws M ~ Poisson(L_n^2 / (2D)) edges with both endpoints i.i.d.
/// proportional to W (alias table), which by Poisson thinning gives every
/// pair its exact rate and each loop half its rate; an independent
/// Poisson(W_x^2 / (2D)) per vertex restores the loop rate. Cost O(n + M).
MultiGraph generate_nr(const WeightVector& weights, double denominator, Rng& rng);

/// ENR, CL or GRG simple graph with independent edges of probability
/// edge_probability(kind, W_i W_j / D).
///
/// Vertices are visited in decreasing weight order. Along a row the CL
/// probability min(1, p_ij) is non-increasing and dominates all three
/// models, so it drives geometric skips and each candidate is kept with
/// probability true / bound. Cost O(n log n + candidates).
MultiGraph generate_simple(const WeightVector& weights, ModelKind kind, double denominator, Rng& rng);

/// Dispatches on model.kind and computes the denominator.
MultiGraph generate(const WeightVector& weights, const WeightModel& model, GraphModel graph_model, Rng& rng);

/// Caps multiplicities at 1 and drops loops.
MultiGraph erase(const MultiGraph& g);

/// Number of distinct non-loop neighbors. Throws std::out_of_range.
std::size_t degree(const MultiGraph& g, Vertex v);

/// Text edge list: "# n=<n> model=<kind>" followed by "u v m" lines with
/// 1-based ids, loops as "u u m". Extra header lines are written verbatim
/// after the first, each prefixed with "# ".
void write_edge_list(std::ostream& out, const MultiGraph& g, std::string_view model_label,
                     std::span<const std::string> extra_header = {});
/// Reads the format above; '#' lines other than the n= header are ignored.
/// Throws std::runtime_error with the offending line number.
MultiGraph read_edge_list(std::istream& in);

/// One weight per line, full precision, with optional '#' header lines.
void write_weights(std::ostream& out, const WeightVector& weights, std::span<const std::string> header = {});
WeightVector read_weights(std::istream& in);

}  // namespace nrgraph
