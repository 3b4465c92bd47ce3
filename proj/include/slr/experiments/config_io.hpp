#pragma once

// Scenario files are plain `key = value` lines; `#` starts a comment. Keys
// mirror the ScenarioSpec fields, with the simulator fields under `sim.`:
//
//   preset = desk
//   experiment = network_eval
//   repetitions = 20
//   m_values = 1,2,3
//   deactivation_sweep = 0,0.3,0.6,0.9
//   sim.dims = 0.005,0.005,0.005
//   sim.channel = sinr
//
// `preset` (desk or full) and `experiment` pick the starting values,
// wherever they appear; every other key overrides one field. README.md lists
// all keys.

#include <cstdint>
#include <optional>
#include <string>

#include "slr/experiments/scenario.hpp"

namespace slr::experiments {

struct ParseDefaults {
  Preset preset = Preset::desk;
  // Used when the text has no `experiment` key; required then.
  std::optional<Experiment> experiment;
};

// Throws netsim::ConfigError naming the offending key. The result is
// validated.
ScenarioSpec parse_scenario(const std::string& text, const ParseDefaults& defaults = {});
ScenarioSpec load_scenario(const std::string& path, const ParseDefaults& defaults = {});

// Canonical text with every key; parse_scenario(to_config_text(s)) == s.
std::string to_config_text(const ScenarioSpec& spec);

std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace slr::experiments
