#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "slr/netsim/channel.hpp"
#include "slr/netsim/field.hpp"
#include "slr/routing/predicates.hpp"
#include "slr/viewport/selection.hpp"

namespace slr::netsim {

struct NodePair {
  NodeId sender = 0;
  NodeId recipient = 0;
  friend bool operator==(const NodePair&, const NodePair&) = default;
};

struct PairOutcome {
  NodePair pair;
  viewport::ViewportChoice choice;
  std::uint8_t packet_id = 0;
  bool delivered = false;
  std::size_t transmissions = 0;     // sender included
  std::vector<NodeId> forwarders;    // sorted; sender excluded
};

struct ExchangeReport {
  std::vector<PairOutcome> pairs;
  std::vector<std::uint32_t> per_node_transmissions;
  std::size_t total_transmissions = 0;

  std::size_t delivered_count() const;
};

struct ExchangeParams {
  routing::Scheme scheme = routing::Scheme::slr;
  routing::PathWidth m{1};
  viewport::Prioritization prio = viewport::Prioritization::resolution;
  // Keys packet ids, start jitter and shadowing; reuse it across schemes and
  // widths to compare them on identical randomness.
  std::uint64_t cycle_key = 0;
};

// One operation cycle: every pair's sender picks a viewport, builds its
// packet (distinct ids within the cycle) and transmits at time zero plus a
// guard-interval jitter. A receiving node drops ids it has already seen,
// derives its usable address from the CS field, consumes the packet if it
// belongs to the recipient's zone, and otherwise forwards it one slot later
// when the scheme's predicate holds. Delivery means some active node of the
// recipient zone (same usable address as UA2) received the packet.
//
// Senders and recipients must be active and fully addressed.
ExchangeReport run_data_exchange(const Field& field, const Channel& channel, std::span<const NodePair> pairs,
                                 const ExchangeParams& params);

// Interference-free propagation over the nominal-radius graph, for one pair
// under the route in `spec`. Returns the number of transmitting nodes, sender
// included; this is what run_data_exchange yields for a single pair on an
// ideal channel.
class IdealPropagator {
 public:
  IdealPropagator(const Field& field, const Channel& channel);

  std::size_t transmissions(NodePair pair, const routing::RouteSpec& spec, routing::Scheme scheme,
                            bool* delivered = nullptr);

 private:
  const Field& field_;
  const Channel& channel_;
  std::vector<std::uint32_t> visited_;
  std::uint32_t epoch_ = 0;
  std::vector<NodeId> frontier_;
};

}  // namespace slr::netsim
