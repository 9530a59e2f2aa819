#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nrgraph/graph.hpp"
#include "nrgraph/inference.hpp"
#include "nrgraph/statistics.hpp"
#include "nrgraph/weights.hpp"

namespace nrgraph {

inline constexpr std::string_view kVersion = "nrsim 1.0.0";

/// Invalid or inconsistent experiment configuration. The message always
/// names the offending key or constraint.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Flat key=value experiment description. Keys: beta, t_min, kind,
/// normalizer, n, R, seed, specs, intervals, level, threads, path_cap,
/// edges_out, weights_out, results_out, report_out. List values are
/// comma-separated; an interval is written "a:b" with b possibly "inf".
struct ExperimentConfig {
  double beta = 3.0;
  double t_min = 0.25;
  GraphModel graph{ModelKind::ENR, Normalizer::Ln};
  std::size_t n = 100'000;
  std::size_t replications = 500;
  std::uint64_t base_seed = 1;
  std::vector<StatisticSpec> specs{StatisticSpec::all_vertices()};
  std::vector<Interval> intervals{{1.0, std::numeric_limits<double>::infinity()}, {1.0, 2.0}};
  double level = 0.01;
  std::size_t threads = 1;
  std::size_t path_cap = kDefaultPathCap;
  std::string edges_out = "edges.txt";
  std::string weights_out = "weights.txt";
  std::string results_out = "results.csv";
  std::string report_out = "report.txt";
};

/// Every key accepted by apply_setting, in echo order.
const std::vector<std::string>& config_keys();

/// Parses "key=value" lines; blank lines and '#' comments are skipped.
/// Throws ConfigError with the line number on malformed lines.
std::map<std::string, std::string> read_key_values(std::istream& in);

/// Sets one key. Throws ConfigError naming the key on unknown keys or
/// unparsable values.
void apply_setting(ExperimentConfig& config, std::string_view key, std::string_view value);

ExperimentConfig load_config(std::istream& in);

enum class Command { Generate, Verify };

/// Checks the constraints a command needs: n >= 1 (generate) or n >= 2
/// (verify), R >= 1, non-empty specs, valid intervals, level in (0, 1), a
/// subcritical model, and existing output directories. Throws ConfigError.
void validate(const ExperimentConfig& config, Command command);

WeightModel weight_model(const ExperimentConfig& config);
ReplicationConfig replication_config(const ExperimentConfig& config);

/// "key=value" lines for every setting that influences results. threads is
/// left out so output files do not depend on the degree of parallelism.
std::vector<std::string> config_echo(const ExperimentConfig& config);

std::vector<Interval> parse_intervals(std::string_view text);

}  // namespace nrgraph
