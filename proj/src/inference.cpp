#include "nrgraph/inference.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <boost/math/distributions/chi_squared.hpp>
#include <fmt/format.h>

#include "nrgraph/components.hpp"
#include "nrgraph/limits.hpp"

namespace nrgraph {

namespace {

std::string format_number(double x) {
  if (std::isinf(x)) return "inf";
  return fmt::format("{:.17g}", x);
}

std::string format_bound(double x) {
  if (std::isinf(x)) return "inf";
  return fmt::format("{:g}", x);
}

}  // namespace

void TestReport::write_text(std::ostream& out) const {
  out << name << ": statistic=" << fmt::format("{:.6g}", statistic);
  if (p_value) out << " p-value=" << fmt::format("{:.6g}", *p_value);
  out << " N=" << sample_size << " level=" << level << " -> " << (reject ? "REJECT" : "pass") << '\n';
  for (const auto& [key, value] : details) out << "  " << key << " = " << value << '\n';
}

void TestReport::write_key_values(std::ostream& out) const {
  out << '[' << name << "]\n";
  out << "statistic=" << format_number(statistic) << '\n';
  out << "p_value=" << (p_value ? format_number(*p_value) : std::string("NA")) << '\n';
  out << "level=" << format_number(level) << '\n';
  out << "decision=" << (reject ? "reject" : "pass") << '\n';
  out << "sample_size=" << sample_size << '\n';
  for (const auto& [key, value] : details) out << key << '=' << value << '\n';
}

double ks_statistic(std::span<const double> samples, const std::function<double(double)>& cdf) {
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    const auto rank = static_cast<double>(i + 1);
    d = std::max({d, std::abs(rank / n - f), std::abs((rank - 1.0) / n - f)});
  }
  return d;
}

double kolmogorov_survival(double lambda) {
  // Below 0.2 the survival function equals 1 to within 1e-12.
  if (lambda < 0.2) return 1.0;
  double sum = 0.0;
  for (int k = 1; k < 100'000; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 == 1 ? 2.0 : -2.0) * term;
    if (term < 1e-12) break;
  }
  return std::clamp(sum, 0.0, 1.0);
}

TestReport ks_test(std::span<const double> samples, const std::function<double(double)>& cdf, double level) {
  if (samples.size() < 5)
    throw std::invalid_argument(fmt::format("ks_test needs at least 5 samples (got {})", samples.size()));
  TestReport report;
  report.name = "ks";
  report.level = level;
  report.sample_size = samples.size();
  report.statistic = ks_statistic(samples, cdf);
  report.p_value = kolmogorov_survival(std::sqrt(static_cast<double>(samples.size())) * report.statistic);
  report.reject = *report.p_value < level;
  return report;
}

TestReport poisson_gof(std::span<const std::uint64_t> counts, double lambda, double level) {
  if (counts.size() < 20)
    throw std::invalid_argument(fmt::format("poisson_gof needs at least 20 replications (got {})", counts.size()));
  if (!(lambda > 0.0)) throw std::invalid_argument("poisson_gof: lambda must be positive");

  const auto r = static_cast<double>(counts.size());
  double mean = 0.0;
  for (auto c : counts) mean += static_cast<double>(c);
  mean /= r;
  double squares = 0.0;
  for (auto c : counts) squares += (static_cast<double>(c) - mean) * (static_cast<double>(c) - mean);

  const double z = (mean - lambda) / std::sqrt(lambda / r);
  const double p_mean = std::erfc(std::abs(z) / std::sqrt(2.0));

  double dispersion = 0.0;
  double p_dispersion = 0.0;
  if (mean > 0.0) {
    dispersion = squares / mean;
    const boost::math::chi_squared_distribution<double> chi2(r - 1.0);
    const double lower = boost::math::cdf(chi2, dispersion);
    const double upper = boost::math::cdf(boost::math::complement(chi2, dispersion));
    p_dispersion = std::min(1.0, 2.0 * std::min(lower, upper));
  }

  TestReport report;
  report.name = "poisson_gof";
  report.level = level;
  report.sample_size = counts.size();
  report.statistic = z;
  report.p_value = std::min(1.0, 2.0 * std::min(p_mean, p_dispersion));
  report.reject = *report.p_value < level;
  report.details = {
      {"lambda", format_number(lambda)},
      {"mean", format_number(mean)},
      {"mean_z", format_number(z)},
      {"mean_p_value", format_number(p_mean)},
      {"mean_decision", p_mean < level ? "reject" : "pass"},
      {"dispersion_index", format_number(dispersion)},
      {"dispersion_p_value", format_number(p_dispersion)},
      {"dispersion_decision", p_dispersion < level ? "reject" : "pass"},
  };
  return report;
}

std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t replication) {
  std::uint64_t z = base_seed + replication * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

struct PreparedSpec {
  const StatisticSpec* spec;
  double xi;
};

ReplicationResult replicate(const ReplicationConfig& config, std::span<const PreparedSpec> prepared, double qn,
                            std::size_t rep, std::uint64_t base_seed) {
  ReplicationResult result;
  result.rep = rep;
  result.seed = derive_seed(base_seed, rep);
  result.n = config.n;

  Rng rng(result.seed);
  const auto weights = sample_weights(config.model, config.n, rng);
  const auto graph = generate(weights, config.model, config.graph, rng);
  const auto view = components(graph, weights);
  const auto top = static_cast<Vertex>(weights.argmax());
  result.w_top = weights[top];

  StatisticEvaluator evaluator(graph, view, config.path_cap);
  for (const auto& p : prepared) {
    SpecOutcome outcome;
    outcome.spec = p.spec->to_string();
    try {
      std::vector<double> points;
      points.reserve(view.num_components());
      const double scale = 1.0 / (qn * p.xi);
      for (Vertex v : view.representatives())
        points.push_back(static_cast<double>(evaluator.count(v, *p.spec)) * scale);
      const PointSet xi_n(std::move(points));
      outcome.point_max = xi_n.max_point().value_or(0.0);
      for (const auto& interval : config.intervals)
        outcome.interval_counts.push_back(xi_n.interval_count(interval.lower, interval.upper));
      outcome.s_top = evaluator.count(top, *p.spec);
    } catch (const std::exception& e) {
      outcome.error = e.what();
    }
    result.outcomes.push_back(std::move(outcome));
  }
  return result;
}

}  // namespace

ReplicationResult run_replication(const ReplicationConfig& config, std::size_t rep, std::uint64_t base_seed) {
  std::vector<PreparedSpec> prepared;
  for (const auto& spec : config.specs) prepared.push_back({&spec, xi(config.model, spec)});
  return replicate(config, prepared, config.model.q_n(config.n), rep, base_seed);
}

std::vector<ReplicationResult> run_replications(const ReplicationConfig& config, std::size_t replications,
                                                std::uint64_t base_seed, std::size_t threads) {
  if (replications < 1) throw std::invalid_argument("run_replications: need at least one replication");
  if (config.n < 2) throw std::invalid_argument("run_replications: n must be at least 2");

  std::vector<PreparedSpec> prepared;
  for (const auto& spec : config.specs) prepared.push_back({&spec, xi(config.model, spec)});
  const double qn = config.model.q_n(config.n);

  std::vector<ReplicationResult> results(replications);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < replications; i = next++)
      results[i] = replicate(config, prepared, qn, i + 1, base_seed);
  };
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, replications);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  return results;
}

std::string interval_column_name(const Interval& interval) {
  return fmt::format("count_{}_{}", format_bound(interval.lower), format_bound(interval.upper));
}

void write_results_csv(std::ostream& out, std::span<const ReplicationResult> results,
                       std::span<const Interval> intervals, std::span<const std::string> header) {
  for (const auto& line : header) out << "# " << line << '\n';
  out << "rep,seed,n,spec,point_max";
  for (const auto& interval : intervals) out << ',' << interval_column_name(interval);
  out << ",s_top,w_top\n";
  for (const auto& r : results) {
    for (const auto& o : r.outcomes) {
      if (o.error) continue;
      out << r.rep << ',' << r.seed << ',' << r.n << ',' << o.spec << ',' << format_number(o.point_max);
      for (auto c : o.interval_counts) out << ',' << c;
      out << ',' << o.s_top << ',' << format_number(r.w_top) << '\n';
    }
  }
}

}  // namespace nrgraph
