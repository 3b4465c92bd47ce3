#include "slr/experiments/config_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace slr::experiments {

using netsim::ConfigError;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& key, const std::string& value) {
  std::vector<std::string> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw ConfigError(key, "empty list item");
    out.push_back(item);
  }
  if (out.empty()) throw ConfigError(key, "empty list");
  return out;
}

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
  T v{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end) throw ConfigError(key, "not a valid number: '" + text + "'");
  return v;
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  throw ConfigError(key, "expected true or false, got '" + text + "'");
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <typename T>
std::string join(const std::vector<T>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    if constexpr (std::is_floating_point_v<T>) {
      out += fmt(values[i]);
    } else {
      out += std::to_string(values[i]);
    }
  }
  return out;
}

using Setter = std::function<void(ScenarioSpec&, const std::string& key, const std::string& value)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = [] {
    std::map<std::string, Setter> t;
    auto integer = [](auto member) {
      return [member](ScenarioSpec& s, const std::string& k, const std::string& v) {
        s.*member = parse_number<int>(k, v);
      };
    };
    auto real = [](auto member) {
      return [member](ScenarioSpec& s, const std::string& k, const std::string& v) {
        s.*member = parse_number<double>(k, v);
      };
    };
    auto sim_integer = [](auto member) {
      return [member](ScenarioSpec& s, const std::string& k, const std::string& v) {
        s.sim.*member = parse_number<int>(k, v);
      };
    };
    auto sim_real = [](auto member) {
      return [member](ScenarioSpec& s, const std::string& k, const std::string& v) {
        s.sim.*member = parse_number<double>(k, v);
      };
    };
    t["pair_count"] = integer(&ScenarioSpec::pair_count);
    t["cycles"] = integer(&ScenarioSpec::cycles);
    t["interarrival_s"] = real(&ScenarioSpec::interarrival_s);
    t["repetitions"] = integer(&ScenarioSpec::repetitions);
    t["max_parallel_pairs"] = integer(&ScenarioSpec::max_parallel_pairs);
    t["m_values"] = [](ScenarioSpec& s, const std::string& k, const std::string& v) {
      s.m_values.clear();
      for (const auto& item : split_list(k, v)) s.m_values.push_back(parse_number<int>(k, item));
    };
    t["deactivation_sweep"] = [](ScenarioSpec& s, const std::string& k, const std::string& v) {
      s.deactivation_sweep.clear();
      for (const auto& item : split_list(k, v)) s.deactivation_sweep.push_back(parse_number<double>(k, item));
    };
    t["prio"] = [](ScenarioSpec& s, const std::string& k, const std::string& v) {
      if (v == "resolution") {
        s.prio = viewport::Prioritization::resolution;
      } else if (v == "distance") {
        s.prio = viewport::Prioritization::distance;
      } else {
        throw ConfigError(k, "expected resolution or distance, got '" + v + "'");
      }
    };
    t["sim.node_count"] = sim_integer(&netsim::SimConfig::node_count);
    t["sim.dims"] = [](ScenarioSpec& s, const std::string& k, const std::string& v) {
      const auto items = split_list(k, v);
      if (items.size() != 3) throw ConfigError(k, "expected three side lengths");
      const double x = parse_number<double>(k, items[0]);
      const double y = parse_number<double>(k, items[1]);
      const double z = parse_number<double>(k, items[2]);
      try {
        s.sim.dims = coords::SpaceDims{x, y, z};
      } catch (const std::invalid_argument& e) {
        throw ConfigError(k, e.what());
      }
    };
    t["sim.placement"] = [](ScenarioSpec& s, const std::string& k, const std::string& v) {
      if (v == "grid") {
        s.sim.placement = netsim::Placement::grid;
      } else if (v == "random") {
        s.sim.placement = netsim::Placement::random;
      } else {
        throw ConfigError(k, "expected grid or random, got '" + v + "'");
      }
    };
    t["sim.grid_spacing"] = sim_real(&netsim::SimConfig::grid_spacing);
    t["sim.frequency"] = sim_real(&netsim::SimConfig::frequency);
    t["sim.tx_power_dBnW"] = sim_real(&netsim::SimConfig::tx_power_dBnW);
    t["sim.noise_dBnW"] = sim_real(&netsim::SimConfig::noise_dBnW);
    t["sim.sinr_threshold_dB"] = sim_real(&netsim::SimConfig::sinr_threshold_dB);
    t["sim.guard_interval_s"] = sim_real(&netsim::SimConfig::guard_interval_s);
    t["sim.packet_duration_s"] = sim_real(&netsim::SimConfig::packet_duration_s);
    t["sim.absorption_K_dB_per_km"] = sim_real(&netsim::SimConfig::absorption_K_dB_per_km);
    t["sim.shadow_sigma_dB"] = sim_real(&netsim::SimConfig::shadow_sigma_dB);
    t["sim.deactivation_ratio"] = sim_real(&netsim::SimConfig::deactivation_ratio);
    t["sim.seed"] = [](ScenarioSpec& s, const std::string& k, const std::string& v) {
      s.sim.seed = parse_number<std::uint64_t>(k, v);
    };
    t["sim.channel"] = [](ScenarioSpec& s, const std::string& k, const std::string& v) {
      for (auto c : {netsim::ChannelMode::sinr, netsim::ChannelMode::no_interference, netsim::ChannelMode::ideal}) {
        if (v == netsim::to_string(c)) {
          s.sim.channel = c;
          return;
        }
      }
      throw ConfigError(k, "expected sinr, no_interference or ideal, got '" + v + "'");
    };
    t["sim.self_interference"] = [](ScenarioSpec& s, const std::string& k, const std::string& v) {
      s.sim.self_interference = parse_bool(k, v);
    };
    return t;
  }();
  return table;
}

}  // namespace

ScenarioSpec parse_scenario(const std::string& text, const ParseDefaults& defaults) {
  std::vector<std::pair<std::string, std::string>> entries;
  std::map<std::string, int> seen;
  std::istringstream is(text);
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no), "expected 'key = value'");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("line " + std::to_string(line_no), "missing key");
    if (key != "preset" && key != "experiment" && !setters().contains(key)) {
      throw ConfigError(key, "unknown key");
    }
    if (value.empty()) throw ConfigError(key, "missing value");
    if (seen[key]++) throw ConfigError(key, "given more than once");
    entries.emplace_back(std::move(key), std::move(value));
  }

  Preset preset = defaults.preset;
  std::optional<Experiment> experiment = defaults.experiment;
  for (const auto& [k, v] : entries) {
    if (k == "preset") preset = preset_from_string(v);
    if (k == "experiment") {
      const Experiment e = experiment_from_string(v);
      if (defaults.experiment && *defaults.experiment != e) {
        throw ConfigError("experiment", "'" + v + "' conflicts with the requested " + to_string(*defaults.experiment));
      }
      experiment = e;
    }
  }
  if (!experiment) throw ConfigError("experiment", "missing");

  ScenarioSpec spec = preset_spec(preset, *experiment);
  for (const auto& [k, v] : entries) {
    if (k == "preset" || k == "experiment") continue;
    setters().at(k)(spec, k, v);
  }
  spec.validate();
  return spec;
}

ScenarioSpec load_scenario(const std::string& path, const ParseDefaults& defaults) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str(), defaults);
}

std::string to_config_text(const ScenarioSpec& s) {
  std::ostringstream os;
  os << "experiment = " << to_string(s.experiment) << '\n'
     << "pair_count = " << s.pair_count << '\n'
     << "cycles = " << s.cycles << '\n'
     << "interarrival_s = " << fmt(s.interarrival_s) << '\n'
     << "repetitions = " << s.repetitions << '\n'
     << "m_values = " << join(s.m_values) << '\n'
     << "deactivation_sweep = " << join(s.deactivation_sweep) << '\n'
     << "max_parallel_pairs = " << s.max_parallel_pairs << '\n'
     << "prio = " << (s.prio == viewport::Prioritization::resolution ? "resolution" : "distance") << '\n'
     << "sim.node_count = " << s.sim.node_count << '\n'
     << "sim.dims = " << fmt(s.sim.dims.x_len) << ',' << fmt(s.sim.dims.y_len) << ',' << fmt(s.sim.dims.z_len) << '\n'
     << "sim.placement = " << netsim::to_string(s.sim.placement) << '\n'
     << "sim.grid_spacing = " << fmt(s.sim.grid_spacing) << '\n'
     << "sim.frequency = " << fmt(s.sim.frequency) << '\n'
     << "sim.tx_power_dBnW = " << fmt(s.sim.tx_power_dBnW) << '\n'
     << "sim.noise_dBnW = " << fmt(s.sim.noise_dBnW) << '\n'
     << "sim.sinr_threshold_dB = " << fmt(s.sim.sinr_threshold_dB) << '\n'
     << "sim.guard_interval_s = " << fmt(s.sim.guard_interval_s) << '\n'
     << "sim.packet_duration_s = " << fmt(s.sim.packet_duration_s) << '\n'
     << "sim.absorption_K_dB_per_km = " << fmt(s.sim.absorption_K_dB_per_km) << '\n'
     << "sim.shadow_sigma_dB = " << fmt(s.sim.shadow_sigma_dB) << '\n'
     << "sim.deactivation_ratio = " << fmt(s.sim.deactivation_ratio) << '\n'
     << "sim.seed = " << s.sim.seed << '\n'
     << "sim.channel = " << netsim::to_string(s.sim.channel) << '\n'
     << "sim.self_interference = " << (s.sim.self_interference ? "true" : "false") << '\n';
  return os.str();
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace slr::experiments
