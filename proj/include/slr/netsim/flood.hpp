#pragma once

#include <cstddef>
#include <cstdint>

#include "slr/netsim/channel.hpp"
#include "slr/netsim/field.hpp"
#include "slr/netsim/packets.hpp"

namespace slr::netsim {

struct FloodReport {
  std::size_t transmissions = 0;
  std::size_t addressed = 0;    // active nodes with all eight distances
  std::size_t incomplete = 0;   // active nodes missing at least one distance
  int anchors_flooded = 0;      // cascade length; 8 when every anchor fired
  int hop_diameter = 0;         // largest distance assigned
  double duration_s = 0.0;
};

// Hop-diameter estimate used to size the cascade timeout: the space diagonal
// over the nominal radius, plus one.
int estimated_hop_diameter(const Field& field, const SimConfig& cfg);

// Anchor A1 floods first. A non-anchor (or non-originating anchor) node keeps
// the first copy it hears from each anchor, stores hop_count + 1 and
// rebroadcasts one slot later. Anchor A(i+1) starts its own flood a timeout
// after first hearing A(i). Addresses of inactive nodes stay unset.
Field run_setup_flood(const Field& field, const SimConfig& cfg, FloodReport* report = nullptr);

// Active addressed nodes per distinct usable address, averaged over the 24
// viewports.
double measured_nodes_per_zone(const Field& addressed);

// Same, reusing a channel built for this field.
Field run_setup_flood(const Field& field, const Channel& channel, FloodReport* report = nullptr);

}  // namespace slr::netsim
