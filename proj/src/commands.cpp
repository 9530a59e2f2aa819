#include "nrgraph/commands.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include <fmt/format.h>

#include "nrgraph/limits.hpp"

namespace nrgraph {

namespace {

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(fmt::format("cannot open '{}' for writing", path));
  return out;
}

void finish_output(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw std::runtime_error(fmt::format("write to '{}' failed", path));
}

std::string fmt12(double x) { return fmt::format("{:.12g}", x); }

}  // namespace

VerifyOutcome run_verify(const ExperimentConfig& config) {
  validate(config, Command::Verify);
  const auto replication = replication_config(config);
  const auto& model = replication.model;
  const double qn = model.q_n(config.n);
  const double beta = model.beta();
  auto frechet = [beta](double x) { return frechet_cdf(x, beta); };

  VerifyOutcome outcome;
  outcome.results = run_replications(replication, config.replications, config.base_seed, config.threads);

  std::vector<double> control;
  for (const auto& r : outcome.results) control.push_back(r.w_top / qn);
  if (control.size() >= 5) {
    outcome.control = ks_test(control, frechet, config.level);
    outcome.control->name = "control_max_weight_frechet";
    outcome.any_reject |= outcome.control->reject;
  }

  for (std::size_t s = 0; s < config.specs.size(); ++s) {
    SpecVerification check;
    check.spec = config.specs[s].to_string();
    check.xi = xi(model, config.specs[s]);
    std::vector<std::vector<std::uint64_t>> counts(config.intervals.size());
    double ratio_sum = 0.0;
    for (const auto& r : outcome.results) {
      const auto& o = r.outcomes[s];
      if (o.error) {
        if (!check.first_failure) check.first_failure = fmt::format("rep {}: {}", r.rep, *o.error);
        ++check.failures;
        continue;
      }
      check.maxima.push_back(o.point_max);
      for (std::size_t i = 0; i < counts.size(); ++i) counts[i].push_back(o.interval_counts[i]);
      ratio_sum += static_cast<double>(o.s_top) / r.w_top;
    }
    if (!check.maxima.empty()) check.top_ratio = ratio_sum / static_cast<double>(check.maxima.size());
    if (check.maxima.size() >= 5) {
      check.frechet = ks_test(check.maxima, frechet, config.level);
      check.frechet->name = "frechet_max " + check.spec;
      outcome.any_reject |= check.frechet->reject;
    }
    for (std::size_t i = 0; i < config.intervals.size(); ++i) {
      const auto& interval = config.intervals[i];
      IntervalCheck ic{interval, nu_beta(interval.lower, interval.upper, beta), std::nullopt};
      if (counts[i].size() >= 20) {
        ic.report = poisson_gof(counts[i], ic.expected, config.level);
        ic.report->name = "poisson " + check.spec + " " + interval_column_name(interval);
        outcome.any_reject |= ic.report->reject;
      }
      check.intervals.push_back(std::move(ic));
    }
    outcome.specs.push_back(std::move(check));
  }
  return outcome;
}

int cmd_generate(const ExperimentConfig& config, std::ostream& log) {
  validate(config, Command::Generate);
  const auto model = weight_model(config);
  Rng rng(derive_seed(config.base_seed, 1));
  const auto weights = sample_weights(model, config.n, rng);
  const auto graph = generate(weights, model, config.graph, rng);

  std::string label(to_string(config.graph.kind));
  if (config.graph.normalizer == Normalizer::NEW) label += "'";
  const auto header = config_echo(config);

  auto edges = open_output(config.edges_out);
  write_edge_list(edges, graph, label, header);
  finish_output(edges, config.edges_out);

  auto weights_file = open_output(config.weights_out);
  std::vector<std::string> weight_header{fmt::format("n={} model={}", config.n, label)};
  weight_header.insert(weight_header.end(), header.begin(), header.end());
  write_weights(weights_file, weights, weight_header);
  finish_output(weights_file, config.weights_out);

  log << fmt::format("wrote {} vertices, {} edges to {} and weights to {}\n", graph.num_vertices(),
                     graph.edge_total(), config.edges_out, config.weights_out);
  return kExitPass;
}

int cmd_verify(const ExperimentConfig& config, std::ostream& log) {
  const auto outcome = run_verify(config);
  const auto header = config_echo(config);

  auto csv = open_output(config.results_out);
  write_results_csv(csv, outcome.results, config.intervals, header);
  finish_output(csv, config.results_out);

  auto report = open_output(config.report_out);
  for (const auto& line : header) report << "# " << line << '\n';
  auto emit = [&](const TestReport& r) {
    r.write_text(log);
    r.write_key_values(report);
  };
  if (outcome.control)
    emit(*outcome.control);
  else
    log << "control check skipped: fewer than 5 replications\n";
  for (const auto& s : outcome.specs) {
    log << fmt::format("statistic {}: xi = {}, failed replications = {}\n", s.spec, fmt12(s.xi), s.failures);
    if (s.first_failure) log << "  first failure: " << *s.first_failure << '\n';
    report << "[top_vertex " << s.spec << "]\n"
           << "xi=" << fmt::format("{:.17g}", s.xi) << '\n'
           << "mean_s_top_over_w_top=" << fmt::format("{:.17g}", s.top_ratio) << '\n'
           << "relative_deviation=" << fmt::format("{:.17g}", s.top_ratio / s.xi - 1.0) << '\n'
           << "failures=" << s.failures << '\n';
    log << fmt::format("  top-vertex diagnostic: mean S_n(v_top)/W_top = {} ({:+.2f}% vs xi)\n", fmt12(s.top_ratio),
                       100.0 * (s.top_ratio / s.xi - 1.0));
    if (s.frechet)
      emit(*s.frechet);
    else
      log << "  Frechet KS skipped: fewer than 5 successful replications\n";
    for (const auto& ic : s.intervals) {
      if (ic.report)
        emit(*ic.report);
      else
        log << "  Poisson check for " << interval_column_name(ic.interval)
            << " skipped: fewer than 20 successful replications\n";
    }
  }
  finish_output(report, config.report_out);
  log << (outcome.any_reject ? "RESULT: at least one test rejects\n" : "RESULT: all tests pass\n");
  return outcome.any_reject ? kExitRejected : kExitPass;
}

int cmd_xi(double beta, double t_min, std::string_view spec_text, std::ostream& out, std::ostream& err) {
  const ParetoParams params{beta, t_min};
  if (!(beta > 2.0) || !(t_min > 0.0)) {
    err << fmt::format("error: need beta > 2 and t_min > 0 (got beta={}, t_min={})\n", beta, t_min);
    return kExitUsage;
  }
  if (!check_subcritical(params)) {
    err << fmt::format("error: model not subcritical: E[W^2] = {} >= E[W] = {}\n", fmt12(pareto_moment(params, 2)),
                       fmt12(pareto_moment(params, 1)));
    return kExitUsage;
  }
  const auto model = WeightModel::pareto(beta, t_min);
  const auto spec = StatisticSpec::parse(spec_text);
  const double value = xi(model, spec);
  out << fmt::format("xi = {}\n", fmt12(value));
  out << fmt::format("statistic = {}\n", spec.to_string());
  out << fmt::format("E[W] = {}\nE[W^2] = {}\n", fmt12(model.moment(1)), fmt12(model.moment(2)));
  std::vector<int> orders;
  if (const auto* d = std::get_if<StatisticSpec::DegreeM>(&spec.kind())) orders.push_back(static_cast<int>(d->m));
  if (const auto* t = std::get_if<StatisticSpec::TerminalTree>(&spec.kind())) {
    orders.push_back(static_cast<int>(t->tree.degree(0) + 1));
    for (std::size_t i = 1; i < t->tree.size(); ++i) orders.push_back(static_cast<int>(t->tree.degree(i)));
    out << fmt::format("c(T) = {}\n", t->automorphisms);
  }
  std::sort(orders.begin(), orders.end());
  orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
  for (int m : orders) out << fmt::format("E[W^{} e^-W] = {}\n", m, fmt12(model.exp_moment(m)));
  return kExitPass;
}

int cmd_tree(std::string_view text, std::ostream& out, std::ostream& err) {
  try {
    const auto tree = RootedTree::parse(text);
    out << "canonical = " << canonical_form(tree) << '\n';
    out << "c(T) = " << automorphism_count(tree) << '\n';
    out << "parents = " << tree.to_parent_array() << '\n';
    out << "deg_T =";
    for (auto d : tree.degrees()) out << ' ' << d;
    out << '\n';
    return kExitPass;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cmd_moments(double beta, double t_min, int max_order, std::ostream& out, std::ostream& err) {
  const ParetoParams params{beta, t_min};
  if (!(beta > 2.0) || !(t_min > 0.0)) {
    err << fmt::format("error: need beta > 2 and t_min > 0 (got beta={}, t_min={})\n", beta, t_min);
    return kExitUsage;
  }
  out << fmt::format("family = pareto\nbeta = {}\nt_min = {}\n", fmt12(beta), fmt12(t_min));
  for (int k = 1; k < beta; ++k) out << fmt::format("E[W^{}] = {}\n", k, fmt12(pareto_moment(params, k)));
  const bool subcritical = check_subcritical(params);
  out << "subcritical = " << (subcritical ? "true" : "false") << '\n';
  if (!subcritical) return kExitPass;
  const auto model = WeightModel::pareto(beta, t_min);
  for (int m = 0; m <= max_order; ++m) out << fmt::format("E[W^{} e^-W] = {}\n", m, fmt12(model.exp_moment(m)));
  return kExitPass;
}

}  // namespace nrgraph
