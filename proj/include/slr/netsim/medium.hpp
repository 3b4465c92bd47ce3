#pragma once

// Shared wireless medium driven by the event queue. Every transmission lasts
// one packet duration; when it ends, each candidate receiver decodes it
// against noise plus the power of the transmissions that overlapped it in
// time. Overlapping copies of the same content (same content key) do not
// count as interference unless SimConfig::self_interference is set. A node
// cannot decode while it is itself transmitting.

#include <cmath>
#include <cstdint>
#include <vector>

#include "slr/netsim/channel.hpp"
#include "slr/netsim/event_queue.hpp"
#include "slr/netsim/field.hpp"
#include "slr/netsim/random.hpp"

namespace slr::netsim {

inline TimePs to_ps(double seconds) { return static_cast<TimePs>(std::llround(seconds * 1e12)); }

template <typename Payload>
class Medium {
 public:
  struct Transmission {
    NodeId node;
    TimePs start;
    TimePs end;
    std::uint64_t link_key;
    std::uint64_t content_key;
    Payload payload;
  };

  Medium(const Field& field, const Channel& channel, std::uint64_t stream_key)
      : field_(field),
        channel_(channel),
        stream_key_(stream_key),
        duration_ps_(to_ps(channel.config().packet_duration_s)),
        guard_ps_(to_ps(channel.config().guard_interval_s)),
        on_air_stamp_(field.size(), kNoStamp),
        tx_count_(field.size(), 0) {}

  TimePs slot_ps() const { return duration_ps_ + guard_ps_; }
  TimePs guard_ps() const { return guard_ps_; }

  // Uniform in [0, guard], fixed by key.
  TimePs jitter_ps(std::uint64_t key) const {
    if (guard_ps_ <= 0) return 0;
    return static_cast<TimePs>(splitmix64(mix_keys({stream_key_, key})) % static_cast<std::uint64_t>(guard_ps_ + 1));
  }

  // `link_key` identifies this use of the links out of `tx` for shadowing;
  // `content_key` identifies what is on the air.
  void transmit_at(NodeId tx, Payload payload, TimePs start, std::uint64_t link_key, std::uint64_t content_key) {
    const auto idx = transmissions_.size();
    transmissions_.push_back({tx, start, start + duration_ps_, link_key, content_key, std::move(payload)});
    ++tx_count_[tx];
    queue_.push(start, kStartPriority, idx);
    queue_.push(start + duration_ps_, kEndPriority, idx);
  }

  // Handler: void(NodeId rx, const Payload&, TimePs now). It may call
  // transmit_at to schedule follow-up transmissions.
  template <typename Handler>
  void run(Handler&& on_receive) {
    while (!queue_.empty()) {
      const auto entry = queue_.pop();
      now_ = entry.time;
      if (entry.priority == kStartPriority) {
        recent_.push_back(entry.event);
      } else {
        finish(entry.event, on_receive);
      }
    }
  }

  TimePs now() const { return now_; }
  std::size_t transmission_count() const { return transmissions_.size(); }
  const std::vector<std::uint32_t>& per_node_transmissions() const { return tx_count_; }
  const std::vector<Transmission>& transmissions() const { return transmissions_; }

 private:
  static constexpr int kEndPriority = 0;  // ends before starts at equal times
  static constexpr int kStartPriority = 1;
  static constexpr std::size_t kNoStamp = static_cast<std::size_t>(-1);

  template <typename Handler>
  void finish(std::size_t idx, Handler& on_receive) {
    const Transmission& t = transmissions_[idx];
    const TimePs window_start = t.start;
    const TimePs window_end = t.end;

    // Prune transmissions that ended before any still-pending one started.
    std::erase_if(recent_, [&](std::size_t j) { return transmissions_[j].end <= now_ - duration_ps_; });

    const bool self_interference = channel_.config().self_interference;
    overlap_.clear();
    for (std::size_t j : recent_) {
      if (j == idx) continue;
      const auto& o = transmissions_[j];
      if (o.start < window_end && o.end > window_start) {
        on_air_stamp_[o.node] = idx;
        if (self_interference || o.content_key != t.content_key) overlap_.push_back(j);
      }
    }
    on_air_stamp_[t.node] = idx;

    const auto& cfg = channel_.config();
    const std::uint64_t use_key = mix_keys({stream_key_, t.link_key});
    receivers_.clear();
    for (const auto& link : channel_.candidates(t.node)) {
      const NodeId rx = link.peer;
      if (!field_.node(rx).active || on_air_stamp_[rx] == idx) continue;
      if (cfg.channel == ChannelMode::ideal) {
        if (link.loss_dB <= channel_.budget_dB()) receivers_.push_back(rx);
        continue;
      }
      const double shadow = cfg.shadow_sigma_dB * keyed_normal(mix_keys({use_key, rx}));
      const double signal = db_to_linear(channel_.tx_power_dBnW() - link.loss_dB - shadow);
      // Interference the decode can still tolerate.
      double headroom = signal / channel_.threshold_linear() - channel_.noise_nW();
      if (headroom < 0.0) continue;
      if (cfg.channel == ChannelMode::sinr) {
        for (std::size_t j : overlap_) {
          headroom -= channel_.power_nW(transmissions_[j].node, rx);
          if (headroom < 0.0) break;
        }
        if (headroom < 0.0) continue;
      }
      receivers_.push_back(rx);
    }
    // Handlers may grow transmissions_, so hand them a stable copy.
    const Payload payload = t.payload;
    for (NodeId rx : receivers_) on_receive(rx, payload, now_);
  }

  const Field& field_;
  const Channel& channel_;
  std::uint64_t stream_key_;
  TimePs duration_ps_;
  TimePs guard_ps_;
  TimePs now_ = 0;
  EventQueue<std::size_t> queue_;
  std::vector<Transmission> transmissions_;
  std::vector<std::size_t> recent_;
  std::vector<std::size_t> overlap_;
  std::vector<NodeId> receivers_;
  std::vector<std::size_t> on_air_stamp_;
  std::vector<std::uint32_t> tx_count_;
};

}  // namespace slr::netsim
