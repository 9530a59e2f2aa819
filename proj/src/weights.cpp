#include "nrgraph/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <fmt/format.h>

namespace nrgraph {

namespace {

constexpr double kQuadratureTolerance = 1e-10;
constexpr double kTailCutoff = 1e-16;

std::string format_double(double x) { return fmt::format("{:.17g}", x); }

double parse_double(const std::map<std::string, std::string>& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) throw std::invalid_argument("weight model: missing key '" + key + "'");
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(it->second, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != it->second.size())
    throw std::invalid_argument("weight model: '" + key + "' is not a number: " + it->second);
  return value;
}

}  // namespace

double pareto_moment(const ParetoParams& params, int k) {
  if (static_cast<double>(k) >= params.beta)
    throw std::domain_error(fmt::format("moment E[W^{}] is infinite for beta = {}", k, params.beta));
  return params.beta * std::pow(params.t_min, k) / (params.beta - k);
}

bool check_subcritical(const ParetoParams& params) {
  if (!(params.beta > 2.0) || !(params.t_min > 0.0)) return false;
  return pareto_moment(params, 2) < pareto_moment(params, 1);
}

WeightModel WeightModel::pareto(double beta, double t_min) {
  if (!(beta > 2.0)) throw std::invalid_argument(fmt::format("beta must exceed 2 (got {})", beta));
  if (!(t_min > 0.0)) throw std::invalid_argument(fmt::format("t_min must be positive (got {})", t_min));
  ParetoParams params{beta, t_min};
  if (!check_subcritical(params)) {
    throw std::invalid_argument(fmt::format(
        "model is not subcritical: E[W^2] = {:.12g} >= E[W] = {:.12g} (need t_min < (beta-2)/(beta-1) = {:.12g})",
        pareto_moment(params, 2), pareto_moment(params, 1), (beta - 2.0) / (beta - 1.0)));
  }
  return WeightModel(params);
}

double WeightModel::tail_prob(double t) const {
  if (t < params_.t_min) return 1.0;
  return std::pow(params_.t_min / t, params_.beta);
}

double WeightModel::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument(fmt::format("quantile: p must lie in (0,1) (got {})", p));
  return params_.t_min * std::pow(1.0 - p, -1.0 / params_.beta);
}

double WeightModel::q_n(std::size_t n) const {
  if (n < 2) throw std::invalid_argument("q_n: n must be at least 2");
  // t_min * n^{1/beta}, written without forming 1 - 1/n.
  return params_.t_min * std::pow(static_cast<double>(n), 1.0 / params_.beta);
}

double WeightModel::moment(int k) const {
  if (k < 1) throw std::invalid_argument("moment: k must be at least 1");
  return pareto_moment(params_, k);
}

double WeightModel::exp_moment(int m) const {
  if (m < 0) throw std::invalid_argument("exp_moment: m must be non-negative");
  const double beta = params_.beta;
  const double log_scale = std::log(beta) + beta * std::log(params_.t_min);
  auto integrand = [=](double w) {
    return std::exp(log_scale + (m - beta - 1.0) * std::log(w) - w);
  };

  // Integrate piece by piece on [t_min, inf); stop once a piece adds less than
  // kTailCutoff of the running total.
  double total = 0.0;
  double error = 0.0;
  double lo = params_.t_min;
  double width = std::max(1.0, static_cast<double>(m));
  for (int piece = 0; piece < 200; ++piece) {
    const double hi = lo + width;
    double piece_error = 0.0;
    const double piece_value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        integrand, lo, hi, 20, kQuadratureTolerance, &piece_error);
    total += piece_value;
    error += piece_error;
    if (piece_value <= kTailCutoff * total && integrand(hi) <= kTailCutoff * total) {
      const double relative = total > 0.0 ? error / total : std::numeric_limits<double>::infinity();
      if (relative > kQuadratureTolerance)
        throw QuadratureError(fmt::format("exp_moment({}): relative error {:.3g} above tolerance", m, relative),
                              relative);
      return total;
    }
    lo = hi;
    width *= 2.0;
  }
  const double relative = total > 0.0 ? error / total : std::numeric_limits<double>::infinity();
  throw QuadratureError(fmt::format("exp_moment({}): tail did not vanish", m), relative);
}

double WeightModel::from_uniform(double u) const { return params_.t_min * std::pow(u, -1.0 / params_.beta); }

std::map<std::string, std::string> WeightModel::to_key_values() const {
  return {{"family", "pareto"}, {"beta", format_double(params_.beta)}, {"t_min", format_double(params_.t_min)}};
}

WeightModel WeightModel::from_key_values(const std::map<std::string, std::string>& kv) {
  auto family = kv.find("family");
  if (family != kv.end() && family->second != "pareto")
    throw std::invalid_argument("weight model: unsupported family '" + family->second + "'");
  return pareto(parse_double(kv, "beta"), parse_double(kv, "t_min"));
}

WeightVector::WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {
  // Neumaier summation keeps the cached total within 1e-9 relative for any n.
  double sum = 0.0;
  double compensation = 0.0;
  for (double w : weights_) {
    if (!(w > 0.0) || !std::isfinite(w))
      throw std::invalid_argument(fmt::format("weights must be finite and positive (got {})", w));
    const double t = sum + w;
    if (std::abs(sum) >= std::abs(w))
      compensation += (sum - t) + w;
    else
      compensation += (w - t) + sum;
    sum = t;
  }
  total_ = sum + compensation;
}

double WeightVector::max() const {
  return weights_.empty() ? 0.0 : *std::max_element(weights_.begin(), weights_.end());
}

std::size_t WeightVector::argmax() const {
  // max_element returns the first maximizer.
  return static_cast<std::size_t>(std::max_element(weights_.begin(), weights_.end()) - weights_.begin());
}

WeightVector sample_weights(const WeightModel& model, std::size_t n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("sample_weights: n must be at least 1");
  std::vector<double> w(n);
  for (auto& x : w) x = model.from_uniform(uniform_open_closed(rng));
  return WeightVector(std::move(w));
}

}  // namespace nrgraph
