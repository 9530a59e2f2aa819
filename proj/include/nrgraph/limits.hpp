#pragma once

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nrgraph/components.hpp"
#include "nrgraph/graph.hpp"
#include "nrgraph/statistics.hpp"
#include "nrgraph/weights.hpp"

namespace nrgraph {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Finite multiset of strictly positive reals, kept sorted in descending
/// order. Non-positive inputs are dropped on construction.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<double> points);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  /// Descending.
  std::span<const double> points() const { return points_; }

  /// Number of points in the half-open interval (a, b]; b may be infinite.
  /// Throws std::invalid_argument unless 0 <= a < b.
  std::size_t interval_count(double a, double b) const;
  std::optional<double> max_point() const;

  /// Each point multiplied by factor > 0.
  PointSet scaled(double factor) const;

  /// CSV with a single column "point", descending.
  void write_csv(std::ostream& out) const;

 private:
  std::vector<double> points_;
};

/// xi for the statistic under the model; see the per-class formulas in
/// limits.cpp. Throws std::invalid_argument for DistanceM(0).
double xi(const WeightModel& model, const StatisticSpec& spec);

/// nu_beta((a, b]) = a^{-beta} - b^{-beta}; b may be infinite. Throws
/// std::invalid_argument unless 0 < a < b.
double nu_beta(double a, double b, double beta);

/// exp(-x^{-beta}) for x > 0, else 0.
double frechet_cdf(double x, double beta);

/// Xi_n: one point S_n(v) / (q(n) xi) per component representative v, zero
/// points dropped. qn and xi_const are inputs so estimated values can be
/// substituted.
PointSet build_xi_n(const MultiGraph& g, const ComponentView& view, const StatisticSpec& spec, double xi_const,
                    double qn, std::size_t path_cap = kDefaultPathCap);

/// Theta_n: the rescaled weights W_v / q(n).
PointSet build_theta_n(const WeightVector& weights, double qn);

}  // namespace nrgraph
