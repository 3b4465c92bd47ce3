#include <numeric>

#include "slr/viewport/selection.hpp"

namespace slr::viewport {

double mean_count(const std::array<std::size_t, kViewportCount>& counts) {
  const auto total = std::accumulate(counts.begin(), counts.end(), std::size_t{0});
  return static_cast<double>(total) / static_cast<double>(kViewportCount);
}

ViewportSampler::ViewportSampler(std::uint64_t seed) : engine_(seed) {}

std::size_t ViewportSampler::next_ordinal() {
  // Rejection keeps the draw exactly uniform and independent of the
  // standard library's distribution implementation.
  constexpr std::uint64_t n = kViewportCount;
  const std::uint64_t limit = std::mt19937_64::max() - (std::mt19937_64::max() % n);
  std::uint64_t x = 0;
  do {
    x = engine_();
  } while (x >= limit);
  return static_cast<std::size_t>(x % n);
}

Viewport ViewportSampler::next() { return coords::kViewports[next_ordinal()]; }

Viewport random_viewport(std::uint64_t rng_seed) { return ViewportSampler(rng_seed).next(); }

}  // namespace slr::viewport
