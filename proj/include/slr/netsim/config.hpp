#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "slr/coords/geometry.hpp"

namespace slr::netsim {

enum class Placement { grid, random };

// sinr: shadowing on the decoded link plus interference from overlapping
//       transmissions of other content.
// no_interference: shadowing only.
// ideal: deterministic disk of the nominal reception radius.
enum class ChannelMode { sinr, no_interference, ideal };

class ConfigError : public std::invalid_argument {
 public:
  ConfigError(const std::string& field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// Defaults: a 17^3 lattice filling a 1 cm^3 cube.
struct SimConfig {
  int node_count = 5000;
  coords::SpaceDims dims{0.01, 0.01, 0.01};
  Placement placement = Placement::grid;
  double grid_spacing = 0.01 / 16.0;
  double frequency = 100e9;
  double tx_power_dBnW = 5.0;
  double noise_dBnW = 0.0;
  double sinr_threshold_dB = -10.0;
  double guard_interval_s = 0.1e-9;
  double packet_duration_s = 10e-9;
  double absorption_K_dB_per_km = 0.52;
  double shadow_sigma_dB = 0.5;
  double deactivation_ratio = 0.0;
  std::uint64_t seed = 1;
  ChannelMode channel = ChannelMode::sinr;
  // Count overlapping copies of the same packet as mutual interference.
  bool self_interference = false;

  // Throws ConfigError naming the first offending field.
  void validate() const;

  friend bool operator==(const SimConfig&, const SimConfig&) = default;
};

SimConfig full_config();
// 9^3 lattice on a 0.5 cm cube; same spacing and radio as the full config.
SimConfig desk_config();

std::string to_string(Placement p);
std::string to_string(ChannelMode c);

}  // namespace slr::netsim
