#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slr/netsim/config.hpp"
#include "slr/viewport/selection.hpp"

namespace slr::experiments {

enum class Experiment { viewport_eval, network_eval, parallel_pairs };

enum class Preset { desk, full };

struct ScenarioSpec {
  netsim::SimConfig sim;
  Experiment experiment = Experiment::viewport_eval;
  int pair_count = 20;
  int cycles = 5;
  double interarrival_s = 10.0;
  int repetitions = 20;
  std::vector<int> m_values{1, 2, 3};
  std::vector<double> deactivation_sweep{0.0, 0.3, 0.6, 0.9};
  // Largest concurrent pair count of the parallel-pairs sweep (1..max).
  int max_parallel_pairs = 10;
  viewport::Prioritization prio = viewport::Prioritization::resolution;

  // Throws netsim::ConfigError naming the first offending field.
  void validate() const;

  friend bool operator==(const ScenarioSpec&, const ScenarioSpec&);
};

ScenarioSpec preset_spec(Preset preset, Experiment experiment);

std::string to_string(Experiment e);
std::string to_string(Preset p);
Experiment experiment_from_string(const std::string& s);  // throws ConfigError("experiment", ...)
Preset preset_from_string(const std::string& s);          // throws ConfigError("preset", ...)

}  // namespace slr::experiments
