#include "slr/viewport/selection.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

namespace slr::viewport {

namespace {

using coords::kAnchorCount;
using coords::kViewports;

int hop(const HopAddress& addr, AnchorIndex a) { return addr[a]; }

int alignment_score(const HopAddress& addr1, const HopAddress& addr2, AnchorIndex a) {
  return std::abs(hop(addr1, a) - hop(addr2, a));
}

int remoteness_score(const HopAddress& addr1, const HopAddress& addr2, AnchorIndex a) {
  return std::min(hop(addr1, a), hop(addr2, a));
}

// The two anchors of vp other than `pivot`.
std::array<AnchorIndex, 2> others(const Viewport& vp, AnchorIndex pivot) {
  std::array<AnchorIndex, 2> out{};
  std::size_t n = 0;
  for (auto a : vp.anchors()) {
    if (a != pivot) out[n++] = a;
  }
  return out;
}

void charge(SelectionTrace* trace, int ops) {
  if (trace) trace->operations += ops;
}

template <typename Score>
AnchorIndex argmax_anchor(Score score, SelectionTrace* trace) {
  AnchorIndex best{1};
  int best_score = -1;
  for (int i = 1; i <= kAnchorCount; ++i) {
    const AnchorIndex a{i};
    const int s = score(a);
    charge(trace, 2);
    if (s > best_score) {
      best_score = s;
      best = a;
    }
  }
  return best;
}

}  // namespace

AnchorIndex aligned_anchor(const HopAddress& addr1, const HopAddress& addr2) {
  return argmax_anchor([&](AnchorIndex a) { return alignment_score(addr1, addr2, a); }, nullptr);
}

AnchorIndex remote_anchor(const HopAddress& addr1, const HopAddress& addr2) {
  return argmax_anchor([&](AnchorIndex a) { return remoteness_score(addr1, addr2, a); }, nullptr);
}

Viewport orient_for_pair(const Viewport& vp, const HopAddress& addr1, const HopAddress& addr2) {
  AnchorIndex best = vp.a_dot;
  int best_score = -1;
  for (int i = 1; i <= kAnchorCount; ++i) {
    const AnchorIndex a{i};
    if (!vp.contains(a)) continue;
    const int s = alignment_score(addr1, addr2, a);
    if (s > best_score) {
      best_score = s;
      best = a;
    }
  }
  return coords::oriented(vp, best);
}

ViewportChoice select_viewport(const HopAddress& addr1, const HopAddress& addr2, Prioritization prio,
                               SelectionTrace* trace) {
  const AnchorIndex pivot =
      prio == Prioritization::resolution
          ? argmax_anchor([&](AnchorIndex a) { return alignment_score(addr1, addr2, a); }, trace)
          : argmax_anchor([&](AnchorIndex a) { return remoteness_score(addr1, addr2, a); }, trace);

  std::size_t best_cs = coords::viewports_containing(pivot)[0];
  int max_score = -1;
  charge(trace, 2);

  for (std::size_t ordinal : coords::viewports_containing(pivot)) {
    if (trace) ++trace->loop_iterations;
    charge(trace, 9);
    const auto [first, second] = others(kViewports[ordinal], pivot);
    int score = 0;
    if (prio == Prioritization::resolution) {
      score = std::min(remoteness_score(addr1, addr2, first), remoteness_score(addr1, addr2, second));
    } else {
      score = std::max(alignment_score(addr1, addr2, first), alignment_score(addr1, addr2, second));
    }
    if (score > max_score) {
      best_cs = ordinal;
      max_score = score;
    }
  }

  const Viewport vp = orient_for_pair(kViewports[best_cs], addr1, addr2);
  charge(trace, 2);
  return {vp, coords::project(addr1, vp), coords::project(addr2, vp)};
}

std::size_t argmin_viewport(const std::array<std::size_t, kViewportCount>& counts) {
  return static_cast<std::size_t>(std::min_element(counts.begin(), counts.end()) - counts.begin());
}

BruteForceResult optimal_viewport_bruteforce(const HopAddress& addr1, const HopAddress& addr2,
                                             std::span<const HopAddress> field, routing::PathWidth m) {
  BruteForceResult result;
  std::vector<UsableAddress> zones;
  for (std::size_t v = 0; v < kViewportCount; ++v) {
    const Viewport vp = orient_for_pair(kViewports[v], addr1, addr2);
    const routing::RouteSpec spec{vp, coords::project(addr1, vp), coords::project(addr2, vp), m};
    zones.clear();
    for (const auto& a : field) {
      if (!a.complete()) continue;
      const auto ua = coords::project(a, vp);
      if (routing::should_retransmit(ua, spec)) zones.push_back(ua);
    }
    std::sort(zones.begin(), zones.end());
    result.counts[v] = static_cast<std::size_t>(std::unique(zones.begin(), zones.end()) - zones.begin());
  }
  result.ordinal = argmin_viewport(result.counts);
  result.vp = orient_for_pair(kViewports[result.ordinal], addr1, addr2);
  return result;
}

}  // namespace slr::viewport
