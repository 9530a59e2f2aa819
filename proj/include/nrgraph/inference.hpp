#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nrgraph/graph.hpp"
#include "nrgraph/statistics.hpp"
#include "nrgraph/weights.hpp"

namespace nrgraph {

struct TestReport {
  std::string name;
  double statistic = 0.0;
  std::optional<double> p_value;
  double level = 0.01;
  bool reject = false;
  std::size_t sample_size = 0;
  /// Extra named quantities, in insertion order.
  std::vector<std::pair<std::string, std::string>> details;

  void write_text(std::ostream& out) const;
  /// "[name]" followed by key=value lines.
  void write_key_values(std::ostream& out) const;
};

/// sup_x |F_N(x) - F(x)| over the sorted samples; no minimum sample size.
double ks_statistic(std::span<const double> samples, const std::function<double(double)>& cdf);

/// P(K > lambda) for the Kolmogorov distribution via
/// 2 Σ (-1)^{k-1} exp(-2 k^2 lambda^2), truncated once terms drop below 1e-12.
double kolmogorov_survival(double lambda);

/// One-sample Kolmogorov-Smirnov test with the asymptotic p-value. Throws
/// std::invalid_argument for fewer than 5 samples.
TestReport ks_test(std::span<const double> samples, const std::function<double(double)>& cdf, double level = 0.01);

/// Poisson goodness of fit for replicated counts with hypothesised mean
/// lambda. Two checks: a normal mean test |mean - lambda| / sqrt(lambda / R)
/// and the two-sided dispersion index (R - 1) s^2 / mean against
/// chi-square(R - 1). The report rejects when the Bonferroni-combined
/// p-value 2 min(p_mean, p_dispersion) is below level. Throws
/// std::invalid_argument for fewer than 20 counts or lambda <= 0.
TestReport poisson_gof(std::span<const std::uint64_t> counts, double lambda, double level = 0.01);

/// Replication seed: a SplitMix64 finalizer applied to
/// base + r * 0x9E3779B97F4A7C15. Injective in r for a fixed base because
/// the golden-ratio increment is odd and the finalizer is a bijection.
std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t replication);

struct Interval {
  double lower;
  double upper;  // may be +infinity
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct ReplicationConfig {
  WeightModel model;
  GraphModel graph;
  std::size_t n = 0;
  std::vector<StatisticSpec> specs;
  std::vector<Interval> intervals;
  std::size_t path_cap = kDefaultPathCap;
};

struct SpecOutcome {
  std::string spec;
  /// Largest point of Xi_n, 0 when Xi_n is empty.
  double point_max = 0.0;
  /// Xi_n((a, b]) for each configured interval.
  std::vector<std::size_t> interval_counts;
  /// S_n at the vertex of largest weight.
  std::size_t s_top = 0;
  std::optional<std::string> error;
};

struct ReplicationResult {
  std::size_t rep = 0;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  double w_top = 0.0;
  std::vector<SpecOutcome> outcomes;  // one per configured spec, same order
};

/// One replication: weights -> graph -> components -> every statistic.
/// Statistic failures are stored in SpecOutcome::error.
ReplicationResult run_replication(const ReplicationConfig& config, std::size_t rep, std::uint64_t base_seed);

/// Replications 1..R, each with its own derived seed. Results are ordered
/// by replication index and do not depend on `threads`.
std::vector<ReplicationResult> run_replications(const ReplicationConfig& config, std::size_t replications,
                                                std::uint64_t base_seed, std::size_t threads = 1);

/// Results CSV: rep,seed,n,spec,point_max,<one count column per interval>,s_top,w_top.
/// Interval (a, b] is named count_<a>_<b> ("inf" for an infinite bound), so
/// the default intervals yield count_1_inf and count_1_2. Rows whose
/// statistic failed are omitted. Header lines are written first as "# ...".
void write_results_csv(std::ostream& out, std::span<const ReplicationResult> results,
                       std::span<const Interval> intervals, std::span<const std::string> header = {});

std::string interval_column_name(const Interval& interval);

}  // namespace nrgraph
