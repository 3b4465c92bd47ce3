#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "slr/experiments/evaluations.hpp"

namespace ex = slr::experiments;

int main(int argc, char** argv) {
  CLI::App app{"Stateless linear routing simulator"};
  app.set_version_flag("--version", ex::software_version());
  app.require_subcommand(1);

  std::string config;
  std::string out = "out";
  std::string preset = "desk";
  std::optional<std::uint64_t> seed;

  struct Command {
    const char* name;
    const char* help;
    std::optional<ex::Experiment> experiment;
    bool snapshot;
  };
  const Command commands[] = {
      {"viewport-eval", "Viewport selection efficiency", ex::Experiment::viewport_eval, false},
      {"network-eval", "Delivery and retransmitter ratios vs deactivation and m", ex::Experiment::network_eval,
       false},
      {"parallel-pairs", "Transmissions per node vs concurrent pairs", ex::Experiment::parallel_pairs, false},
      {"flood-snapshot", "Run the setup flood and dump node addresses", ex::Experiment::viewport_eval, true},
      {"run", "Run the experiment named in the config file", std::nullopt, false},
  };

  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--config", config, "Scenario file (key = value lines)")->check(CLI::ExistingFile);
    sub->add_option("--seed", seed, "Override sim.seed");
    sub->add_option("--out", out, "Output directory")->capture_default_str();
    sub->add_option("--preset", preset, "Starting values")->check(CLI::IsMember({"desk", "full"}))
        ->capture_default_str();
    if (std::string(c.name) == "run") sub->get_option("--config")->required();
  }

  CLI11_PARSE(app, argc, argv);

  for (const auto& c : commands) {
    if (!app.got_subcommand(c.name)) continue;
    ex::RunOptions options;
    options.config_path = config;
    options.out_dir = out;
    options.defaults.preset = ex::preset_from_string(preset);
    options.defaults.experiment = c.experiment;
    options.seed = seed;
    options.snapshot = c.snapshot;
    const int status = ex::run_scenario(options, std::cerr);
    if (status == 0) std::cout << "wrote " << out << '\n';
    return status;
  }
  return 1;
}
