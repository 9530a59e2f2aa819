#pragma once

#include <cstddef>
#include <map>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nrgraph {

using Rng = std::mt19937_64;

/// Uniform variate on (0, 1] built from the top 53 bits of one engine call.
inline double uniform_open_closed(Rng& rng) {
  return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

/// Raised when adaptive quadrature cannot reach the requested tolerance.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved_relative_error)
      : std::runtime_error(what), achieved_(achieved_relative_error) {}
  double achieved_relative_error() const { return achieved_; }

 private:
  double achieved_;
};

/// Raw Pareto parameters, not yet validated. Used where a parameter pair
/// has to be inspected before a model may exist (e.g. diagnostics for a
/// rejected configuration).
struct ParetoParams {
  double beta = 0.0;
  double t_min = 0.0;
};

/// E[W^k] for a Pareto(beta, t_min) law: beta * t_min^k / (beta - k).
/// Throws std::domain_error when k >= beta.
double pareto_moment(const ParetoParams& params, int k);

/// True iff E[W^2] < E[W] (strict). Parameters with beta <= 2 or
/// t_min <= 0 are never subcritical.
bool check_subcritical(const ParetoParams& params);

/// Heavy-tailed weight law P(W > t) = (t_min / t)^beta for t >= t_min.
///
/// Only the Pareto family (constant slowly varying part) is implemented. A
/// model can only be constructed in the subcritical regime, since every
/// downstream constant divides by E[W] - E[W^2].
class WeightModel {
 public:
  /// Throws std::invalid_argument on beta <= 2, t_min <= 0, or
  /// E[W^2] >= E[W].
  static WeightModel pareto(double beta, double t_min);

  double beta() const { return params_.beta; }
  double t_min() const { return params_.t_min; }
  const ParetoParams& params() const { return params_; }

  double tail_prob(double t) const;
  double cdf(double t) const { return 1.0 - tail_prob(t); }

  /// F^{-1}(p) for p in (0, 1).
  double quantile(double p) const;

  /// q(n) = F^{-1}(1 - 1/n), n >= 2.
  double q_n(std::size_t n) const;

  /// E[W^k], k >= 1, k < beta.
  double moment(int k) const;
  double mean() const { return moment(1); }

  /// E[W^m e^{-W}] by adaptive Gauss-Kronrod quadrature, relative
  /// tolerance 1e-10. Throws QuadratureError when not reached.
  double exp_moment(int m) const;

  /// Draws one weight from a uniform variate u in (0, 1]: t_min * u^{-1/beta}.
  double from_uniform(double u) const;

  /// Key-value form: family=pareto, beta=..., t_min=...
  std::map<std::string, std::string> to_key_values() const;
  static WeightModel from_key_values(const std::map<std::string, std::string>& kv);

 private:
  explicit WeightModel(ParetoParams params) : params_(params) {}
  ParetoParams params_;
};

/// Per-vertex weights (vertex v stored at index v - 1) with cached total L_n.
class WeightVector {
 public:
  WeightVector() = default;
  /// Throws std::invalid_argument if any entry is not strictly positive.
  explicit WeightVector(std::vector<double> weights);

  std::size_t size() const { return weights_.size(); }
  bool empty() const { return weights_.empty(); }
  double operator[](std::size_t i) const { return weights_[i]; }
  std::span<const double> values() const { return weights_; }
  double total() const { return total_; }
  /// W_(n); 0 for an empty vector.
  double max() const;
  /// 0-based index of the largest weight, smallest index on ties.
  std::size_t argmax() const;

 private:
  std::vector<double> weights_;
  double total_ = 0.0;
};

WeightVector sample_weights(const WeightModel& model, std::size_t n, Rng& rng);

}  // namespace nrgraph
