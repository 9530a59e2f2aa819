#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nrgraph/config.hpp"
#include "nrgraph/inference.hpp"

namespace nrgraph {

enum ExitCode : int {
  kExitPass = 0,
  kExitRejected = 1,
  kExitUsage = 2,
  kExitRuntime = 3,
};

struct IntervalCheck {
  Interval interval;
  double expected = 0.0;  // nu_beta((a, b])
  std::optional<TestReport> report;
};

struct SpecVerification {
  std::string spec;
  double xi = 0.0;
  std::size_t failures = 0;
  std::optional<std::string> first_failure;
  /// Sample of max Xi_n points (one per successful replication).
  std::vector<double> maxima;
  std::optional<TestReport> frechet;
  std::vector<IntervalCheck> intervals;
  /// Mean of S_n(v_top) / W_top over successful replications.
  double top_ratio = 0.0;
};

struct VerifyOutcome {
  std::vector<ReplicationResult> results;
  std::vector<SpecVerification> specs;
  /// KS of W_(n) / q(n) against Frechet(beta).
  std::optional<TestReport> control;
  bool any_reject = false;
};

/// Runs the replications and every check. Tests that need more samples than
/// are available (KS needs 5, the Poisson check 20) are left empty.
VerifyOutcome run_verify(const ExperimentConfig& config);

/// Writes the edge list and the weights file of one graph drawn with seed
/// derive_seed(base_seed, 1).
int cmd_generate(const ExperimentConfig& config, std::ostream& log);
int cmd_verify(const ExperimentConfig& config, std::ostream& log);
int cmd_xi(double beta, double t_min, std::string_view spec, std::ostream& out, std::ostream& err);
int cmd_tree(std::string_view tree, std::ostream& out, std::ostream& err);
int cmd_moments(double beta, double t_min, int max_order, std::ostream& out, std::ostream& err);

}  // namespace nrgraph
