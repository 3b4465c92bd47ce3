#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "slr/experiments/config_io.hpp"
#include "slr/experiments/report.hpp"
#include "slr/experiments/scenario.hpp"

namespace slr::experiments {

// Per pair and m: transmitting nodes (sender included) of the interference
// free propagation under the resolution and distance heuristics, the best and
// worst of the 24 viewports, and their mean (the random baseline), plus each
// series' excess over the optimum. All nodes are powered on.
Report eval_viewport_selection(const ScenarioSpec& spec);

// Per deactivation ratio, m and scheme: mean delivery ratio over the cycles
// of each repetition and the mean percentage of active nodes that forwarded a
// pair's packet. The field is addressed once; each repetition draws a new set
// of failed nodes.
Report eval_network_efficiency(const ScenarioSpec& spec);

// Per concurrent pair count 1..max_parallel_pairs: packet transmissions per
// active node for SLR and CORONA at the first m value, no deactivation.
Report eval_parallel_pairs(const ScenarioSpec& spec);

Report evaluate(const ScenarioSpec& spec);

struct RunArtifacts {
  std::string report_path;
  std::string manifest_path;
};

// Writes report.csv and manifest.txt into out_dir (created if missing).
RunArtifacts write_artifacts(const ScenarioSpec& spec, const Report& report, const std::string& out_dir);

// Builds the field with sim.deactivation_ratio, runs the setup flood and
// writes snapshot.csv and manifest.txt into out_dir.
RunArtifacts write_flood_snapshot(const ScenarioSpec& spec, const std::string& out_dir);

struct RunOptions {
  std::string config_path;  // empty: preset values only
  std::string out_dir = "out";
  ParseDefaults defaults;
  std::optional<std::uint64_t> seed;  // overrides sim.seed
  bool snapshot = false;              // flood snapshot instead of an evaluation
};

ScenarioSpec resolve_spec(const RunOptions& options);

// Loads the config, evaluates and writes the artifacts. Returns 0 on
// success, 2 for configuration errors and 1 for other failures; diagnostics
// go to err.
int run_scenario(const RunOptions& options, std::ostream& err);

std::string software_version();

}  // namespace slr::experiments
