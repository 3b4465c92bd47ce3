#pragma once

// Sender-side viewport selection: the model-fitting heuristic in both
// prioritizations, the exhaustive optimum over the 24 viewports, and the
// random baseline.

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>

#include "slr/coords/anchors.hpp"
#include "slr/routing/predicates.hpp"

namespace slr::viewport {

using coords::AnchorIndex;
using coords::HopAddress;
using coords::kViewportCount;
using coords::UsableAddress;
using coords::Viewport;

enum class Prioritization { resolution, distance };

struct ViewportChoice {
  Viewport vp;
  UsableAddress ua1;
  UsableAddress ua2;
};

// Operation accounting for the selector, charged per step the way the
// nano-CPU cost model counts them: 2 per anchor scored, 1 per helper
// initialised, 9 per candidate viewport, 1 per usable address written.
struct SelectionTrace {
  int operations = 0;
  int loop_iterations = 0;
};

// argmax_i |R(P1,Ai) - R(P2,Ai)|, lowest index on ties.
AnchorIndex aligned_anchor(const HopAddress& addr1, const HopAddress& addr2);

// argmax_i min(R(P1,Ai), R(P2,Ai)), lowest index on ties.
AnchorIndex remote_anchor(const HopAddress& addr1, const HopAddress& addr2);

// The viewport with its member of largest |R(P1,A) - R(P2,A)| first (lowest
// index on ties), the order a sender writes into the CS field.
Viewport orient_for_pair(const Viewport& vp, const HopAddress& addr1, const HopAddress& addr2);

// Returns the chosen viewport oriented for the pair, plus both endpoints'
// usable addresses under it.
ViewportChoice select_viewport(const HopAddress& addr1, const HopAddress& addr2, Prioritization prio,
                               SelectionTrace* trace = nullptr);

struct BruteForceResult {
  std::size_t ordinal = 0;
  Viewport vp;
  std::array<std::size_t, kViewportCount> counts{};
};

// First viewport with the smallest count.
std::size_t argmin_viewport(const std::array<std::size_t, kViewportCount>& counts);

// Exhaustive search: for each of the 24 viewports, oriented for the pair,
// count the distinct zones (usable addresses) among the complete addresses of
// `field` that satisfy the linear-routing predicate, and keep the smallest.
// `vp` is returned oriented.
BruteForceResult optimal_viewport_bruteforce(const HopAddress& addr1, const HopAddress& addr2,
                                             std::span<const HopAddress> field, routing::PathWidth m);

double mean_count(const std::array<std::size_t, kViewportCount>& counts);

// Uniform draws over the 24 viewports, reproducible per seed.
class ViewportSampler {
 public:
  explicit ViewportSampler(std::uint64_t seed);
  Viewport next();
  std::size_t next_ordinal();

 private:
  std::mt19937_64 engine_;
};

Viewport random_viewport(std::uint64_t rng_seed);

}  // namespace slr::viewport
