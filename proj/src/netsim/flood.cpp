#include "slr/netsim/flood.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "slr/netsim/medium.hpp"

namespace slr::netsim {

namespace {

std::uint64_t content_key(const SetupPacket& p) {
  return (static_cast<std::uint64_t>(p.anchor.value()) << 16) | p.hop_count;
}

}  // namespace

int estimated_hop_diameter(const Field& field, const SimConfig& cfg) {
  const double r = nominal_radius(cfg);
  if (r <= 0.0) return 1;
  return static_cast<int>(std::ceil(field.dims().diagonal() / r)) + 1;
}

double measured_nodes_per_zone(const Field& addressed) {
  double total = 0.0;
  std::vector<coords::UsableAddress> zones;
  for (const auto& vp : coords::kViewports) {
    zones.clear();
    for (const auto& n : addressed.nodes()) {
      if (n.active && n.address.complete()) zones.push_back(coords::project(n.address, vp));
    }
    if (zones.empty()) continue;
    const double nodes = static_cast<double>(zones.size());
    std::sort(zones.begin(), zones.end());
    total += nodes / static_cast<double>(std::unique(zones.begin(), zones.end()) - zones.begin());
  }
  return total / static_cast<double>(coords::kViewportCount);
}

Field run_setup_flood(const Field& field, const SimConfig& cfg, FloodReport* report) {
  const Channel channel(field, cfg);
  return run_setup_flood(field, channel, report);
}

Field run_setup_flood(const Field& field, const Channel& channel, FloodReport* report) {
  const SimConfig& cfg = channel.config();
  Field out = field;
  for (auto& n : out.nodes_mutable()) n.address = {};

  Medium<SetupPacket> medium(out, channel, mix_keys({cfg.seed, 0x5E7F100DULL}));
  const TimePs timeout = static_cast<TimePs>(estimated_hop_diameter(field, cfg)) * medium.slot_ps() * 4;

  int anchors_flooded = 0;
  auto start_flood = [&](coords::AnchorIndex a, TimePs at) {
    const NodeId origin = out.anchor_node(a);
    out.node(origin).address[a] = 0;
    medium.transmit_at(origin, SetupPacket{a, 0}, at, mix_keys({static_cast<std::uint64_t>(a.value()), origin}),
                       content_key(SetupPacket{a, 0}));
    ++anchors_flooded;
  };
  start_flood(coords::AnchorIndex{1}, 0);

  medium.run([&](NodeId rx, const SetupPacket& pkt, TimePs now) {
    Node& node = out.node(rx);
    if (node.address.has(pkt.anchor)) return;
    const auto hop = static_cast<std::uint16_t>(pkt.hop_count + 1);
    node.address[pkt.anchor] = hop;
    const std::uint64_t key = mix_keys({static_cast<std::uint64_t>(pkt.anchor.value()), rx});
    const SetupPacket next{pkt.anchor, hop};
    medium.transmit_at(rx, next, now + medium.slot_ps() + medium.jitter_ps(key), key, content_key(next));

    if (node.anchor && node.anchor->value() == pkt.anchor.value() + 1) {
      start_flood(*node.anchor, now + timeout);
    }
  });

  if (report) {
    report->transmissions = medium.transmission_count();
    report->addressed = out.addressed_count();
    report->incomplete = out.active_count() - report->addressed;
    report->anchors_flooded = anchors_flooded;
    int diameter = 0;
    for (const auto& n : out.nodes()) {
      for (auto v : n.address.r) {
        if (v != coords::HopAddress::kUnset) diameter = std::max<int>(diameter, v);
      }
    }
    report->hop_diameter = diameter;
    report->duration_s = static_cast<double>(medium.now()) * 1e-12;
  }
  return out;
}

}  // namespace slr::netsim
