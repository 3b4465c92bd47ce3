#include "slr/netsim/exchange.hpp"

#include <algorithm>
#include <bitset>
#include <numeric>
#include <stdexcept>

#include "slr/netsim/medium.hpp"

namespace slr::netsim {

namespace {

struct InFlight {
  std::uint32_t pair_index;
};

struct RouteState {
  routing::RouteSpec spec;
  std::uint8_t id;
};

void require_addressed(const Field& field, NodeId id, const char* role) {
  const Node& n = field.node(id);
  if (!n.active || !n.address.complete()) {
    throw std::invalid_argument(std::string(role) + " must be active and fully addressed");
  }
}

}  // namespace

std::size_t ExchangeReport::delivered_count() const {
  return static_cast<std::size_t>(std::count_if(pairs.begin(), pairs.end(), [](const auto& p) { return p.delivered; }));
}

ExchangeReport run_data_exchange(const Field& field, const Channel& channel, std::span<const NodePair> pairs,
                                 const ExchangeParams& params) {
  const SimConfig& cfg = channel.config();
  ExchangeReport report;
  report.per_node_transmissions.assign(field.size(), 0);
  if (pairs.empty()) return report;

  // Distinct ids within the cycle.
  std::vector<std::uint8_t> ids(256);
  std::iota(ids.begin(), ids.end(), std::uint8_t{0});
  Rng id_rng(mix_keys({cfg.seed, params.cycle_key, 0x1D5ULL}));
  id_rng.shuffle(ids);

  std::vector<RouteState> routes;
  routes.reserve(pairs.size());
  report.pairs.resize(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    require_addressed(field, pairs[i].sender, "sender");
    require_addressed(field, pairs[i].recipient, "recipient");
    auto& out = report.pairs[i];
    out.pair = pairs[i];
    out.choice = viewport::select_viewport(field.node(pairs[i].sender).address,
                                           field.node(pairs[i].recipient).address, params.prio);
    out.packet_id = ids[i % ids.size()];
    routes.push_back({{out.choice.vp, out.choice.ua1, out.choice.ua2, params.m}, out.packet_id});
  }

  Medium<InFlight> medium(field, channel, mix_keys({cfg.seed, params.cycle_key}));
  std::vector<std::bitset<256>> seen(field.size());

  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const NodeId sender = pairs[i].sender;
    seen[sender].set(routes[i].id);
    if (report.pairs[i].choice.ua1 == report.pairs[i].choice.ua2) report.pairs[i].delivered = true;
    const std::uint64_t key = mix_keys({i, sender});
    medium.transmit_at(sender, InFlight{static_cast<std::uint32_t>(i)}, medium.jitter_ps(key), key, i);
  }

  medium.run([&](NodeId rx, const InFlight& pkt, TimePs now) {
    const RouteState& route = routes[pkt.pair_index];
    if (seen[rx].test(route.id)) return;
    seen[rx].set(route.id);
    const Node& node = field.node(rx);
    if (!node.address.complete()) return;
    const auto ua = coords::project(node.address, route.spec.vp);
    auto& outcome = report.pairs[pkt.pair_index];
    if (ua == route.spec.ua2) {
      outcome.delivered = true;
      return;
    }
    if (!routing::retransmit(params.scheme, ua, route.spec)) return;
    outcome.forwarders.push_back(rx);
    const std::uint64_t key = mix_keys({pkt.pair_index, rx});
    medium.transmit_at(rx, pkt, now + medium.slot_ps() + medium.jitter_ps(key), key, pkt.pair_index);
  });

  for (const auto& t : medium.transmissions()) ++report.pairs[t.payload.pair_index].transmissions;
  for (auto& p : report.pairs) std::sort(p.forwarders.begin(), p.forwarders.end());
  report.per_node_transmissions = medium.per_node_transmissions();
  report.total_transmissions = medium.transmission_count();
  return report;
}

IdealPropagator::IdealPropagator(const Field& field, const Channel& channel)
    : field_(field), channel_(channel), visited_(field.size(), 0) {}

std::size_t IdealPropagator::transmissions(NodePair pair, const routing::RouteSpec& spec, routing::Scheme scheme,
                                           bool* delivered) {
  if (++epoch_ == 0) {
    std::fill(visited_.begin(), visited_.end(), 0);
    epoch_ = 1;
  }
  bool reached = coords::project(field_.node(pair.sender).address, spec.vp) == spec.ua2;
  frontier_.clear();
  frontier_.push_back(pair.sender);
  visited_[pair.sender] = epoch_;
  std::size_t count = 0;
  // frontier_ doubles as the BFS queue of transmitting nodes.
  for (std::size_t head = 0; head < frontier_.size(); ++head) {
    ++count;
    for (NodeId rx : channel_.neighbors(frontier_[head])) {
      const Node& node = field_.node(rx);
      if (visited_[rx] == epoch_ || !node.active) continue;
      visited_[rx] = epoch_;
      if (!node.address.complete()) continue;
      const auto ua = coords::project(node.address, spec.vp);
      if (ua == spec.ua2) {
        reached = true;
        continue;
      }
      if (routing::retransmit(scheme, ua, spec)) frontier_.push_back(rx);
    }
  }
  if (delivered) *delivered = reached;
  return count;
}

}  // namespace slr::netsim
