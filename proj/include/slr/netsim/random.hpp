#pragma once

// Seeded randomness with output fixed by this code rather than by the
// standard library's distribution implementations, so reports stay
// byte-identical across toolchains.

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <random>
#include <vector>

namespace slr::netsim {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Order-sensitive mix of several keys into one 64-bit value.
constexpr std::uint64_t mix_keys(std::initializer_list<std::uint64_t> keys) {
  std::uint64_t h = 0x243F6A8885A308D3ULL;
  for (auto k : keys) h = splitmix64(h ^ splitmix64(k));
  return h;
}

inline double unit_from_bits(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;  // [0, 1)
}

// Standard normal from a single 64-bit key (Box-Muller on two derived
// uniforms). Used for per-link-use shadowing that does not depend on the
// order in which events are processed.
inline double keyed_normal(std::uint64_t key) {
  const double u1 = 1.0 - unit_from_bits(splitmix64(key));  // (0, 1]
  const double u2 = unit_from_bits(splitmix64(key ^ 0xD1B54A32D192ED03ULL));
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }

  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = engine_.max() - (engine_.max() % n);
    std::uint64_t x = 0;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  double uniform01() { return unit_from_bits(engine_()); }

  double normal() { return keyed_normal(engine_()); }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace slr::netsim
