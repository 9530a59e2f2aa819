#include "nrgraph/config.hpp"

#include <cmath>
#include <filesystem>
#include <istream>

#include <fmt/format.h>

namespace nrgraph {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double to_double(std::string_view key, std::string_view value) {
  std::size_t used = 0;
  double x = 0.0;
  const std::string text(value);
  try {
    x = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw ConfigError(fmt::format("{}: '{}' is not a number", key, value));
  return x;
}

std::uint64_t to_unsigned(std::string_view key, std::string_view value) {
  std::size_t used = 0;
  unsigned long long x = 0;
  const std::string text(value);
  try {
    if (!text.empty() && text[0] != '-') x = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size())
    throw ConfigError(fmt::format("{}: '{}' is not a non-negative integer", key, value));
  return x;
}

std::string bound_text(double x) { return std::isinf(x) ? "inf" : fmt::format("{:.17g}", x); }

void check_output_path(const std::string& key, const std::string& path) {
  if (path.empty()) throw ConfigError(key + ": output path is empty");
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty() && !std::filesystem::is_directory(parent))
    throw ConfigError(fmt::format("{}: directory '{}' does not exist", key, parent.string()));
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys{
      "beta",  "t_min",  "kind",    "normalizer", "n",         "R",           "seed",        "specs",
      "intervals", "level", "threads", "path_cap", "edges_out", "weights_out", "results_out", "report_out"};
  return keys;
}

std::map<std::string, std::string> read_key_values(std::istream& in) {
  std::map<std::string, std::string> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos || trim(text.substr(0, eq)).empty())
      throw ConfigError(fmt::format("config line {}: expected key=value, got '{}'", line_no, text));
    out[std::string(trim(text.substr(0, eq)))] = std::string(trim(text.substr(eq + 1)));
  }
  return out;
}

std::vector<Interval> parse_intervals(std::string_view text) {
  std::vector<Interval> out;
  for (auto item : split(text, ',')) {
    if (item.empty()) continue;
    const auto parts = split(item, ':');
    if (parts.size() != 2) throw ConfigError(fmt::format("intervals: '{}' is not of the form a:b", item));
    const double a = to_double("intervals", parts[0]);
    const double b = (parts[1] == "inf") ? std::numeric_limits<double>::infinity() : to_double("intervals", parts[1]);
    if (!(a > 0.0) || !(a < b))
      throw ConfigError(fmt::format("intervals: ({}, {}] violates 0 < a < b", parts[0], parts[1]));
    out.push_back({a, b});
  }
  return out;
}

void apply_setting(ExperimentConfig& config, std::string_view key, std::string_view value) {
  try {
    if (key == "beta") {
      config.beta = to_double(key, value);
    } else if (key == "t_min") {
      config.t_min = to_double(key, value);
    } else if (key == "kind") {
      config.graph.kind = parse_model_kind(value);
    } else if (key == "normalizer") {
      config.graph.normalizer = parse_normalizer(value);
    } else if (key == "n") {
      config.n = to_unsigned(key, value);
    } else if (key == "R") {
      config.replications = to_unsigned(key, value);
    } else if (key == "seed") {
      config.base_seed = to_unsigned(key, value);
    } else if (key == "specs") {
      config.specs.clear();
      for (auto item : split(value, ','))
        if (!item.empty()) config.specs.push_back(StatisticSpec::parse(item));
    } else if (key == "intervals") {
      config.intervals = parse_intervals(value);
    } else if (key == "level") {
      config.level = to_double(key, value);
    } else if (key == "threads") {
      config.threads = to_unsigned(key, value);
    } else if (key == "path_cap") {
      config.path_cap = to_unsigned(key, value);
    } else if (key == "edges_out") {
      config.edges_out = value;
    } else if (key == "weights_out") {
      config.weights_out = value;
    } else if (key == "results_out") {
      config.results_out = value;
    } else if (key == "report_out") {
      config.report_out = value;
    } else {
      throw ConfigError(fmt::format("unknown config key '{}'", key));
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(fmt::format("{}: {}", key, e.what()));
  }
}

ExperimentConfig load_config(std::istream& in) {
  ExperimentConfig config;
  for (const auto& [key, value] : read_key_values(in)) apply_setting(config, key, value);
  return config;
}

void validate(const ExperimentConfig& config, Command command) {
  if (command == Command::Generate && config.n < 1) throw ConfigError("n: must be at least 1");
  if (command == Command::Verify && config.n < 2) throw ConfigError("n: must be at least 2 (q(n) needs 1 - 1/n > 0)");
  if (config.n > std::numeric_limits<Vertex>::max()) throw ConfigError("n: exceeds the 32-bit vertex id range");
  if (!(config.beta > 2.0)) throw ConfigError(fmt::format("beta: must exceed 2 (got {})", config.beta));
  if (!(config.t_min > 0.0)) throw ConfigError(fmt::format("t_min: must be positive (got {})", config.t_min));
  const ParetoParams params{config.beta, config.t_min};
  if (!check_subcritical(params))
    throw ConfigError(fmt::format("model not subcritical: E[W^2] = {:.12g} >= E[W] = {:.12g}",
                                  pareto_moment(params, 2), pareto_moment(params, 1)));
  if (command == Command::Generate) {
    check_output_path("edges_out", config.edges_out);
    check_output_path("weights_out", config.weights_out);
    return;
  }
  if (config.replications < 1) throw ConfigError("R: must be at least 1");
  if (config.specs.empty()) throw ConfigError("specs: at least one statistic is required");
  for (const auto& spec : config.specs)
    if (const auto* d = std::get_if<StatisticSpec::DistanceM>(&spec.kind()); d && d->m == 0)
      throw ConfigError("specs: distance statistic needs m >= 1");
  if (config.intervals.empty()) throw ConfigError("intervals: at least one interval is required");
  if (!(config.level > 0.0 && config.level < 1.0)) throw ConfigError("level: must lie in (0, 1)");
  check_output_path("results_out", config.results_out);
  check_output_path("report_out", config.report_out);
}

WeightModel weight_model(const ExperimentConfig& config) {
  try {
    return WeightModel::pareto(config.beta, config.t_min);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

ReplicationConfig replication_config(const ExperimentConfig& config) {
  return ReplicationConfig{weight_model(config), config.graph, config.n, config.specs, config.intervals,
                           config.path_cap};
}

std::vector<std::string> config_echo(const ExperimentConfig& config) {
  std::string specs;
  for (const auto& s : config.specs) specs += (specs.empty() ? "" : ",") + s.to_string();
  std::string intervals;
  for (const auto& i : config.intervals)
    intervals += (intervals.empty() ? "" : ",") + bound_text(i.lower) + ":" + bound_text(i.upper);
  return {
      fmt::format("version={}", kVersion),
      "family=pareto",
      fmt::format("beta={:.17g}", config.beta),
      fmt::format("t_min={:.17g}", config.t_min),
      fmt::format("kind={}", to_string(config.graph.kind)),
      fmt::format("normalizer={}", to_string(config.graph.normalizer)),
      fmt::format("n={}", config.n),
      fmt::format("R={}", config.replications),
      fmt::format("seed={}", config.base_seed),
      "specs=" + specs,
      "intervals=" + intervals,
      fmt::format("level={:.17g}", config.level),
      fmt::format("path_cap={}", config.path_cap),
  };
}

}  // namespace nrgraph
