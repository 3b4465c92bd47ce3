#include "slr/netsim/config.hpp"

#include <cmath>

namespace slr::netsim {

void SimConfig::validate() const {
  if (node_count <= coords::kAnchorCount) throw ConfigError("node_count", "must exceed the 8 anchors");
  if (!(dims.x_len > 0.0)) throw ConfigError("x_len", "must be positive");
  if (!(dims.y_len > 0.0)) throw ConfigError("y_len", "must be positive");
  if (!(dims.z_len > 0.0)) throw ConfigError("z_len", "must be positive");
  if (!(grid_spacing > 0.0)) throw ConfigError("grid_spacing", "must be positive");
  for (double len : {dims.x_len, dims.y_len, dims.z_len}) {
    const double cells = len / grid_spacing;
    if (std::abs(cells - std::round(cells)) > 1e-6 || std::round(cells) < 1.0) {
      throw ConfigError("grid_spacing", "must divide every side length into whole cells");
    }
  }
  if (!(frequency > 0.0)) throw ConfigError("frequency", "must be positive");
  if (!std::isfinite(tx_power_dBnW)) throw ConfigError("tx_power_dBnW", "must be finite");
  if (!std::isfinite(noise_dBnW)) throw ConfigError("noise_dBnW", "must be finite");
  if (!std::isfinite(sinr_threshold_dB)) throw ConfigError("sinr_threshold_dB", "must be finite");
  if (!(guard_interval_s >= 0.0)) throw ConfigError("guard_interval_s", "must be non-negative");
  if (!(packet_duration_s > 0.0)) throw ConfigError("packet_duration_s", "must be positive");
  if (!(absorption_K_dB_per_km >= 0.0)) throw ConfigError("absorption_K_dB_per_km", "must be non-negative");
  if (!(shadow_sigma_dB >= 0.0)) throw ConfigError("shadow_sigma_dB", "must be non-negative");
  if (!(deactivation_ratio >= 0.0 && deactivation_ratio < 1.0)) {
    throw ConfigError("deactivation_ratio", "must lie in [0, 1)");
  }
}

SimConfig full_config() { return SimConfig{}; }

SimConfig desk_config() {
  SimConfig cfg;
  cfg.dims = coords::SpaceDims{0.005, 0.005, 0.005};
  cfg.node_count = 729;
  return cfg;
}

std::string to_string(Placement p) { return p == Placement::grid ? "grid" : "random"; }

std::string to_string(ChannelMode c) {
  switch (c) {
    case ChannelMode::sinr: return "sinr";
    case ChannelMode::no_interference: return "no_interference";
    case ChannelMode::ideal: return "ideal";
  }
  return "sinr";
}

}  // namespace slr::netsim
