#pragma once

// Stateless linear routing predicates. Everything in this header is integer
// arithmetic; the purity_probe target compiles it with SSE/x87 registers
// disabled to keep it that way.

#include <cstdint>
#include <stdexcept>

#include "slr/coords/anchors.hpp"

namespace slr::routing {

using coords::UsableAddress;
using coords::Viewport;

// Hop counts must stay below this bound so that every cross product fits the
// 32-bit range the nano-CPU is assumed to have.
inline constexpr int kMaxHopCount = (1 << 15) - 1;
// m travels in a 4-bit header field.
inline constexpr int kMaxPathWidth = 15;

class PathWidth {
 public:
  constexpr explicit PathWidth(int m) : m_(m) {
    if (m < 1 || m > kMaxPathWidth) throw std::out_of_range("path width m must be in 1..15");
  }
  constexpr int value() const { return m_; }
  friend constexpr bool operator==(PathWidth, PathWidth) = default;
  friend constexpr auto operator<=>(PathWidth, PathWidth) = default;

 private:
  int m_;
};

struct RouteSpec {
  Viewport vp;
  UsableAddress ua1;
  UsableAddress ua2;
  PathWidth m{1};
};

enum class Scheme { slr, corona };

namespace detail {

struct Coord3 {
  std::int32_t a, b, c;
};

constexpr Coord3 widen(const UsableAddress& ua) {
  if (ua.r_dot > kMaxHopCount || ua.r_ddot > kMaxHopCount || ua.r_dddot > kMaxHopCount) {
    throw std::out_of_range("hop count exceeds 2^15 - 1");
  }
  return {ua.r_dot, ua.r_ddot, ua.r_dddot};
}

// (p - p1) x (p2 - p1) in the plane of the shared coordinate and one other.
constexpr std::int64_t cross(std::int32_t p, std::int32_t q, std::int32_t p1, std::int32_t q1,
                             std::int32_t p2, std::int32_t q2) {
  return static_cast<std::int64_t>(p - p1) * (q2 - q1) - static_cast<std::int64_t>(q - q1) * (p2 - p1);
}

// x * y <= 0 without forming the product.
constexpr bool product_nonpositive(std::int64_t x, std::int64_t y) {
  return x == 0 || y == 0 || ((x < 0) != (y < 0));
}

// One bracket of the line test: does the cross product change sign (or
// vanish) when the evaluating node steps back by m along p, q, or both?
constexpr bool band(std::int32_t p, std::int32_t q, std::int32_t p1, std::int32_t q1, std::int32_t p2,
                    std::int32_t q2, std::int32_t m) {
  const std::int64_t d = cross(p, q, p1, q1, p2, q2);
  return product_nonpositive(d, cross(p - m, q, p1, q1, p2, q2)) ||
         product_nonpositive(d, cross(p, q - m, p1, q1, p2, q2)) ||
         product_nonpositive(d, cross(p - m, q - m, p1, q1, p2, q2));
}

constexpr bool between(std::int32_t v, std::int32_t e1, std::int32_t e2) {
  return product_nonpositive(v - e2, v - e1);
}

}  // namespace detail

constexpr std::int64_t delta_a(const UsableAddress& ua, const UsableAddress& ua1, const UsableAddress& ua2) {
  const auto p = detail::widen(ua), p1 = detail::widen(ua1), p2 = detail::widen(ua2);
  return detail::cross(p.a, p.b, p1.a, p1.b, p2.a, p2.b);
}

constexpr std::int64_t delta_b(const UsableAddress& ua, const UsableAddress& ua1, const UsableAddress& ua2) {
  const auto p = detail::widen(ua), p1 = detail::widen(ua1), p2 = detail::widen(ua2);
  return detail::cross(p.a, p.c, p1.a, p1.c, p2.a, p2.c);
}

// Width-m curvilinear line through ua1 and ua2.
constexpr bool on_line(const UsableAddress& ua, const RouteSpec& spec) {
  const auto p = detail::widen(ua), p1 = detail::widen(spec.ua1), p2 = detail::widen(spec.ua2);
  const std::int32_t m = spec.m.value();
  return detail::band(p.a, p.b, p1.a, p1.b, p2.a, p2.b, m) &&
         detail::band(p.a, p.c, p1.a, p1.c, p2.a, p2.c, m);
}

constexpr bool on_segment(const UsableAddress& ua, const RouteSpec& spec) {
  const auto p = detail::widen(ua), p1 = detail::widen(spec.ua1), p2 = detail::widen(spec.ua2);
  return detail::between(p.a, p1.a, p2.a) && detail::between(p.b, p1.b, p2.b) &&
         detail::between(p.c, p1.c, p2.c);
}

struct PredicateTrace {
  int segment_checks = 0;
  int line_checks = 0;
};

// Segment box first, line band second.
constexpr bool should_retransmit(const UsableAddress& ua, const RouteSpec& spec,
                                 PredicateTrace* trace = nullptr) {
  if (trace) ++trace->segment_checks;
  if (!on_segment(ua, spec)) return false;
  if (trace) ++trace->line_checks;
  return on_line(ua, spec);
}

// CORONA floods the whole box spanned by the pair's anchor distances.
constexpr bool corona_should_retransmit(const UsableAddress& ua, const RouteSpec& spec) {
  return on_segment(ua, spec);
}

constexpr bool retransmit(Scheme scheme, const UsableAddress& ua, const RouteSpec& spec) {
  return scheme == Scheme::slr ? should_retransmit(ua, spec) : corona_should_retransmit(ua, spec);
}

}  // namespace slr::routing
