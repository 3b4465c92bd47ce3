#include "slr/experiments/scenario.hpp"

#include "slr/routing/predicates.hpp"

namespace slr::experiments {

using netsim::ConfigError;

void ScenarioSpec::validate() const {
  try {
    sim.validate();
  } catch (const ConfigError& e) {
    const std::string& f = e.field();
    const std::string key = (f == "x_len" || f == "y_len" || f == "z_len") ? "sim.dims" : "sim." + f;
    throw ConfigError(key, std::string(e.what()).substr(f.size() + 2));
  }
  if (pair_count < 1) throw ConfigError("pair_count", "must be at least 1");
  if (pair_count > 256) throw ConfigError("pair_count", "must not exceed the 256 packet ids of a cycle");
  if (cycles < 1) throw ConfigError("cycles", "must be at least 1");
  if (!(interarrival_s > 0.0)) throw ConfigError("interarrival_s", "must be positive");
  if (repetitions < 1) throw ConfigError("repetitions", "must be at least 1");
  if (m_values.empty()) throw ConfigError("m_values", "must list at least one width");
  for (int m : m_values) {
    if (m < 1 || m > routing::kMaxPathWidth) throw ConfigError("m_values", "widths must lie in 1..15");
  }
  if (deactivation_sweep.empty()) throw ConfigError("deactivation_sweep", "must list at least one ratio");
  for (double d : deactivation_sweep) {
    if (!(d >= 0.0 && d < 1.0)) throw ConfigError("deactivation_sweep", "ratios must lie in [0, 1)");
  }
  if (max_parallel_pairs < 1 || max_parallel_pairs > 256) {
    throw ConfigError("max_parallel_pairs", "must lie in 1..256");
  }
}

bool operator==(const ScenarioSpec& a, const ScenarioSpec& b) {
  return a.sim == b.sim && a.experiment == b.experiment && a.pair_count == b.pair_count && a.cycles == b.cycles &&
         a.interarrival_s == b.interarrival_s && a.repetitions == b.repetitions && a.m_values == b.m_values &&
         a.deactivation_sweep == b.deactivation_sweep && a.max_parallel_pairs == b.max_parallel_pairs &&
         a.prio == b.prio;
}

ScenarioSpec preset_spec(Preset preset, Experiment experiment) {
  ScenarioSpec s;
  s.experiment = experiment;
  if (preset == Preset::full) {
    s.sim = netsim::full_config();
    s.pair_count = experiment == Experiment::viewport_eval ? 100 : 5;
    s.cycles = 100;
    s.repetitions = 100;
  } else {
    s.sim = netsim::desk_config();
    s.pair_count = experiment == Experiment::viewport_eval ? 20 : 5;
    s.cycles = 5;
    s.repetitions = 20;
  }
  if (experiment == Experiment::viewport_eval) s.repetitions = 1;
  if (experiment == Experiment::parallel_pairs) s.m_values = {1};
  return s;
}

std::string to_string(Experiment e) {
  switch (e) {
    case Experiment::viewport_eval: return "viewport_eval";
    case Experiment::network_eval: return "network_eval";
    case Experiment::parallel_pairs: return "parallel_pairs";
  }
  return "viewport_eval";
}

std::string to_string(Preset p) { return p == Preset::full ? "full" : "desk"; }

Experiment experiment_from_string(const std::string& s) {
  for (auto e : {Experiment::viewport_eval, Experiment::network_eval, Experiment::parallel_pairs}) {
    if (s == to_string(e)) return e;
  }
  throw ConfigError("experiment", "unknown experiment '" + s + "'");
}

Preset preset_from_string(const std::string& s) {
  if (s == "desk") return Preset::desk;
  if (s == "full") return Preset::full;
  throw ConfigError("preset", "unknown preset '" + s + "'");
}

}  // namespace slr::experiments
