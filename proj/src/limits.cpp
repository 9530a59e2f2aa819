#include "nrgraph/limits.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

namespace nrgraph {

PointSet::PointSet(std::vector<double> points) : points_(std::move(points)) {
  std::erase_if(points_, [](double p) { return !(p > 0.0); });
  std::sort(points_.begin(), points_.end(), std::greater<>());
}

std::size_t PointSet::interval_count(double a, double b) const {
  if (!(a >= 0.0) || !(a < b)) throw std::invalid_argument(fmt::format("interval ({}, {}] is empty or invalid", a, b));
  return static_cast<std::size_t>(
      std::count_if(points_.begin(), points_.end(), [&](double p) { return p > a && p <= b; }));
}

std::optional<double> PointSet::max_point() const {
  if (points_.empty()) return std::nullopt;
  return points_.front();
}

PointSet PointSet::scaled(double factor) const {
  if (!(factor > 0.0)) throw std::invalid_argument("PointSet::scaled: factor must be positive");
  std::vector<double> out(points_);
  for (auto& p : out) p *= factor;
  return PointSet(std::move(out));
}

void PointSet::write_csv(std::ostream& out) const {
  out << "point\n";
  for (double p : points_) out << fmt::format("{:.17g}", p) << '\n';
}

double xi(const WeightModel& model, const StatisticSpec& spec) {
  const double m1 = model.moment(1);
  const double m2 = model.moment(2);
  const double gap = m1 - m2;
  return std::visit(
      [&](const auto& k) -> double {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, StatisticSpec::AllVertices>) {
          return m1 / gap;
        } else if constexpr (std::is_same_v<T, StatisticSpec::DistanceM>) {
          if (k.m == 0) throw std::invalid_argument("xi: distance statistic needs m >= 1");
          return std::pow(m2 / m1, static_cast<double>(k.m - 1));
        } else if constexpr (std::is_same_v<T, StatisticSpec::DegreeM>) {
          return model.exp_moment(static_cast<int>(k.m)) / std::tgamma(static_cast<double>(k.m)) / gap;
        } else {
          const auto& tree = k.tree;
          double value = model.exp_moment(static_cast<int>(tree.degree(0) + 1)) / gap;
          for (std::size_t i = 1; i < tree.size(); ++i)
            value *= model.exp_moment(static_cast<int>(tree.degree(i))) / m1;
          return value / static_cast<double>(k.automorphisms);
        }
      },
      spec.kind());
}

double nu_beta(double a, double b, double beta) {
  if (!(a > 0.0) || !(a < b)) throw std::invalid_argument(fmt::format("nu_beta: need 0 < a < b (got {}, {})", a, b));
  const double upper = std::isinf(b) ? 0.0 : std::pow(b, -beta);
  return std::pow(a, -beta) - upper;
}

double frechet_cdf(double x, double beta) {
  if (!(x > 0.0)) return 0.0;
  return std::exp(-std::pow(x, -beta));
}

PointSet build_xi_n(const MultiGraph& g, const ComponentView& view, const StatisticSpec& spec, double xi_const,
                    double qn, std::size_t path_cap) {
  if (!(xi_const > 0.0) || !(qn > 0.0)) throw std::invalid_argument("build_xi_n: xi and q(n) must be positive");
  StatisticEvaluator evaluator(g, view, path_cap);
  const double scale = 1.0 / (qn * xi_const);
  std::vector<double> points;
  points.reserve(view.num_components());
  for (Vertex v : view.representatives()) points.push_back(static_cast<double>(evaluator.count(v, spec)) * scale);
  return PointSet(std::move(points));
}

PointSet build_theta_n(const WeightVector& weights, double qn) {
  if (!(qn > 0.0)) throw std::invalid_argument("build_theta_n: q(n) must be positive");
  std::vector<double> points(weights.values().begin(), weights.values().end());
  for (auto& p : points) p /= qn;
  return PointSet(std::move(points));
}

}  // namespace nrgraph
