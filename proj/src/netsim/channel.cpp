#include "slr/netsim/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace slr::netsim {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double path_loss_dB(double d, const SimConfig& cfg) {
  if (d <= 0.0) return 0.0;
  const double spreading = 20.0 * std::log10(4.0 * std::numbers::pi * d * cfg.frequency / kSpeedOfLight);
  const double absorption = cfg.absorption_K_dB_per_km * d / 1000.0;
  return std::max(spreading, 0.0) + absorption;
}

double path_loss_dB(double d, const SimConfig& cfg, Rng& rng) {
  return path_loss_dB(d, cfg) + cfg.shadow_sigma_dB * rng.normal();
}

double link_budget_dB(const SimConfig& cfg) {
  return cfg.tx_power_dBnW - cfg.noise_dBnW - cfg.sinr_threshold_dB;
}

double nominal_radius(const SimConfig& cfg) {
  const double budget = link_budget_dB(cfg);
  if (budget <= 0.0) return 0.0;
  // Loss is increasing in d; bracket then bisect.
  double lo = 0.0, hi = kSpeedOfLight / cfg.frequency;
  while (path_loss_dB(hi, cfg) < budget) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (path_loss_dB(mid, cfg) < budget ? lo : hi) = mid;
  }
  return lo;
}

bool sinr_success(double signal_nW, double interference_nW, const SimConfig& cfg) {
  const double noise = db_to_linear(cfg.noise_dBnW);
  return signal_nW >= db_to_linear(cfg.sinr_threshold_dB) * (noise + interference_nW);
}

bool link_success(const Node& tx, const Node& rx, std::span<const Node> concurrent_tx, const SimConfig& cfg,
                  Rng& rng) {
  const double signal = db_to_linear(cfg.tx_power_dBnW - path_loss_dB(coords::distance(tx.pos, rx.pos), cfg, rng));
  double interference = 0.0;
  for (const auto& other : concurrent_tx) {
    if (other.id == tx.id || other.id == rx.id) continue;
    interference += db_to_linear(cfg.tx_power_dBnW - path_loss_dB(coords::distance(other.pos, rx.pos), cfg));
  }
  return sinr_success(signal, interference, cfg);
}

Channel::Channel(const Field& field, const SimConfig& cfg) : cfg_(cfg), points_(field.points_per_axis()) {
  budget_dB_ = link_budget_dB(cfg);
  noise_nW_ = db_to_linear(cfg.noise_dBnW);
  threshold_ = db_to_linear(cfg.sinr_threshold_dB);

  const std::array<double, 3> h{field.spacing(0), field.spacing(1), field.spacing(2)};
  const std::size_t table = static_cast<std::size_t>(points_[0]) * points_[1] * points_[2];
  loss_by_offset_.resize(table);
  power_by_offset_.resize(table);
  for (int k = 0; k < points_[2]; ++k) {
    for (int j = 0; j < points_[1]; ++j) {
      for (int i = 0; i < points_[0]; ++i) {
        const double d = std::sqrt(std::pow(i * h[0], 2) + std::pow(j * h[1], 2) + std::pow(k * h[2], 2));
        const double loss = path_loss_dB(d, cfg);
        const auto slot = static_cast<std::size_t>(i + points_[0] * (j + points_[1] * k));
        loss_by_offset_[slot] = static_cast<float>(loss);
        power_by_offset_[slot] = static_cast<float>(db_to_linear(cfg.tx_power_dBnW - loss));
      }
    }
  }

  cells_.reserve(field.size());
  for (const auto& n : field.nodes()) cells_.push_back(n.cell);

  const double reach = cfg.channel == ChannelMode::ideal ? budget_dB_ : budget_dB_ + 5.0 * cfg.shadow_sigma_dB;
  double r_nominal = nominal_radius(cfg);
  double r_reach = r_nominal;
  while (path_loss_dB(r_reach, cfg) <= reach) r_reach *= 1.05;
  std::array<int, 3> span{};
  for (int axis = 0; axis < 3; ++axis) span[axis] = static_cast<int>(std::ceil(r_reach / h[axis]));

  candidates_.resize(field.size());
  neighbors_.resize(field.size());
  for (const auto& n : field.nodes()) {
    for (int dk = -span[2]; dk <= span[2]; ++dk) {
      for (int dj = -span[1]; dj <= span[1]; ++dj) {
        for (int di = -span[0]; di <= span[0]; ++di) {
          if (di == 0 && dj == 0 && dk == 0) continue;
          const LatticeIndex c{n.cell.i + di, n.cell.j + dj, n.cell.k + dk};
          if (c.i < 0 || c.j < 0 || c.k < 0 || c.i >= points_[0] || c.j >= points_[1] || c.k >= points_[2]) continue;
          const NodeId peer = field.id_of(c);
          const float loss = loss_dB(n.id, peer);
          if (loss <= reach) candidates_[n.id].push_back({peer, loss});
          if (loss <= budget_dB_) neighbors_[n.id].push_back(peer);
        }
      }
    }
  }
}

std::size_t Channel::offset_slot(NodeId a, NodeId b) const {
  const auto& ca = cells_[a];
  const auto& cb = cells_[b];
  return static_cast<std::size_t>(std::abs(ca.i - cb.i) +
                                  points_[0] * (std::abs(ca.j - cb.j) + points_[1] * std::abs(ca.k - cb.k)));
}

std::span<const Channel::Link> Channel::candidates(NodeId tx) const { return candidates_.at(tx); }

std::span<const NodeId> Channel::neighbors(NodeId tx) const { return neighbors_.at(tx); }

double Channel::power_nW(NodeId tx, NodeId rx) const { return power_by_offset_[offset_slot(tx, rx)]; }

double Channel::loss_dB(NodeId tx, NodeId rx) const { return loss_by_offset_[offset_slot(tx, rx)]; }

Calibration calibrate(const Field& field, const Channel& channel) {
  Calibration c;
  c.hop_radius_m = nominal_radius(channel.config());
  const auto& d = field.dims();
  c.zones_per_dimension = c.hop_radius_m > 0.0 ? (d.x_len + d.y_len + d.z_len) / 3.0 / c.hop_radius_m : 0.0;
  double total = 0.0;
  for (const auto& n : field.nodes()) total += static_cast<double>(channel.neighbors(n.id).size());
  c.mean_neighbors = field.size() ? total / static_cast<double>(field.size()) : 0.0;
  const double zones = c.zones_per_dimension * c.zones_per_dimension * c.zones_per_dimension;
  c.nodes_per_zone = zones > 0.0 ? static_cast<double>(field.active_count()) / zones : 0.0;
  return c;
}

}  // namespace slr::netsim
