// nrsim: command-line front end for the subcritical rank-1 random graph
// simulator.
//
//   nrsim generate [--config FILE] [--<key> VALUE ...]
//   nrsim verify   [--config FILE] [--<key> VALUE ...]
//   nrsim xi       --beta B --t_min T --spec SPEC
//   nrsim tree     "0 1 1"
//   nrsim moments  --beta B --t_min T [--max-order M]
//
// Exit codes: 0 pass, 1 statistical rejection, 2 usage/config error,
// 3 runtime error.

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "nrgraph/commands.hpp"
#include "nrgraph/config.hpp"

namespace {

struct ExperimentFlags {
  std::string config_path;
  std::map<std::string, std::string> overrides;
};

void add_experiment_flags(CLI::App& cmd, ExperimentFlags& flags) {
  cmd.add_option("--config", flags.config_path, "key=value config file; flags override its entries");
  for (const auto& key : nrgraph::config_keys()) {
    cmd.add_option_function<std::string>(
        "--" + key, [&flags, key](const std::string& value) { flags.overrides[key] = value; },
        "overrides config key '" + key + "'");
  }
}

nrgraph::ExperimentConfig resolve(const ExperimentFlags& flags) {
  nrgraph::ExperimentConfig config;
  if (!flags.config_path.empty()) {
    std::ifstream in(flags.config_path);
    if (!in) throw nrgraph::ConfigError("config: cannot read '" + flags.config_path + "'");
    config = nrgraph::load_config(in);
  }
  for (const auto& [key, value] : flags.overrides) nrgraph::apply_setting(config, key, value);
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(nrgraph::kVersion) + ": subcritical Norros-Reittu graph simulator"};
  app.set_version_flag("--version", std::string(nrgraph::kVersion));
  app.require_subcommand(1);

  ExperimentFlags generate_flags;
  auto* generate = app.add_subcommand("generate", "Draw one graph and write its edge list and weights");
  add_experiment_flags(*generate, generate_flags);

  ExperimentFlags verify_flags;
  auto* verify = app.add_subcommand("verify", "Monte Carlo check of the limit laws");
  add_experiment_flags(*verify, verify_flags);

  double beta = 3.0;
  double t_min = 0.25;
  std::string spec = "all";
  auto* xi = app.add_subcommand("xi", "Print the normalising constant xi for a statistic");
  xi->add_option("--beta", beta)->required();
  xi->add_option("--t_min", t_min)->required();
  xi->add_option("--spec", spec, "all | distance:<m> | degree:<m> | tree:<parents|AHU>");

  std::string tree_text;
  auto* tree = app.add_subcommand("tree", "Canonical form, automorphism count and degrees of a rooted tree");
  tree->add_option("tree", tree_text, "parent array such as \"0 1 1\" or AHU string such as \"(()())\"")
      ->required();

  int max_order = 4;
  auto* moments = app.add_subcommand("moments", "Moments E[W^k] and E[W^m e^-W] of the weight law");
  moments->add_option("--beta", beta)->required();
  moments->add_option("--t_min", t_min)->required();
  moments->add_option("--max-order", max_order, "largest m for E[W^m e^-W]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? nrgraph::kExitPass : nrgraph::kExitUsage;
  }

  try {
    if (*generate) return nrgraph::cmd_generate(resolve(generate_flags), std::cout);
    if (*verify) return nrgraph::cmd_verify(resolve(verify_flags), std::cout);
    if (*xi) return nrgraph::cmd_xi(beta, t_min, spec, std::cout, std::cerr);
    if (*tree) return nrgraph::cmd_tree(tree_text, std::cout, std::cerr);
    if (*moments) return nrgraph::cmd_moments(beta, t_min, max_order, std::cout, std::cerr);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return nrgraph::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return nrgraph::kExitRuntime;
  }
  return nrgraph::kExitUsage;
}
