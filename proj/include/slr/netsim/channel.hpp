#pragma once

// dB-domain link budget and SINR reception.
//
// Path loss = free-space spreading 20 log10(4 pi d f / c) (floored at 0 dB)
//           + molecular absorption K * d
//           + lognormal shadowing N(0, sigma^2) per link use.

#include <cstdint>
#include <span>
#include <vector>

#include "slr/netsim/config.hpp"
#include "slr/netsim/field.hpp"
#include "slr/netsim/random.hpp"

namespace slr::netsim {

inline constexpr double kSpeedOfLight = 299792458.0;

double db_to_linear(double db);

// Deterministic part; 0 dB at d == 0.
double path_loss_dB(double d, const SimConfig& cfg);
// Deterministic part plus one shadowing draw from `rng`.
double path_loss_dB(double d, const SimConfig& cfg, Rng& rng);

// Largest loss a link can take and still decode with no interference.
double link_budget_dB(const SimConfig& cfg);
// Distance at which the deterministic loss meets the link budget.
double nominal_radius(const SimConfig& cfg);

bool sinr_success(double signal_nW, double interference_nW, const SimConfig& cfg);

// Reception of tx at rx while `concurrent_tx` also transmit. Interferers
// contribute their deterministic received power; the decoded link draws its
// shadowing from `rng`.
bool link_success(const Node& tx, const Node& rx, std::span<const Node> concurrent_tx, const SimConfig& cfg,
                  Rng& rng);

// Precomputed link geometry for one field. The lattice makes received power a
// function of the cell offset only, so a single table serves every pair.
class Channel {
 public:
  struct Link {
    NodeId peer;
    float loss_dB;  // deterministic
  };

  Channel(const Field& field, const SimConfig& cfg);

  const SimConfig& config() const { return cfg_; }

  // Peers that can decode with favourable shadowing (all links within the
  // budget plus five standard deviations; exactly the budget when ideal).
  std::span<const Link> candidates(NodeId tx) const;
  // Peers within the nominal reception radius.
  std::span<const NodeId> neighbors(NodeId tx) const;

  double power_nW(NodeId tx, NodeId rx) const;
  double loss_dB(NodeId tx, NodeId rx) const;

  double budget_dB() const { return budget_dB_; }
  double noise_nW() const { return noise_nW_; }
  double threshold_linear() const { return threshold_; }
  double tx_power_dBnW() const { return cfg_.tx_power_dBnW; }

 private:
  std::size_t offset_slot(NodeId a, NodeId b) const;

  SimConfig cfg_;
  std::array<int, 3> points_;
  std::vector<LatticeIndex> cells_;
  std::vector<float> loss_by_offset_;
  std::vector<float> power_by_offset_;
  std::vector<std::vector<Link>> candidates_;
  std::vector<std::vector<NodeId>> neighbors_;
  double budget_dB_ = 0.0;
  double noise_nW_ = 1.0;
  double threshold_ = 0.1;
};

// Nominal-radius calibration summary for a field.
struct Calibration {
  double hop_radius_m = 0.0;
  double zones_per_dimension = 0.0;  // mean side length / radius
  double mean_neighbors = 0.0;
  double nodes_per_zone = 0.0;  // active nodes / zones_per_dimension^3
};

Calibration calibrate(const Field& field, const Channel& channel);

}  // namespace slr::netsim
