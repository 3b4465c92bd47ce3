#pragma once

// Integer-only addressing vocabulary: anchors at the corners of the network
// space, the 24 face viewports, and hop-count addresses.
//
// Anchor indexing (corner bits are x, y, z):
//   A1=(0,0,0) A2=(X,0,0) A3=(X,Y,0) A4=(0,Y,0)
//   A5=(0,0,Z) A6=(X,0,Z) A7=(X,Y,Z) A8=(0,Y,Z)

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>

namespace slr::coords {

inline constexpr int kAnchorCount = 8;
inline constexpr std::size_t kViewportCount = 24;
inline constexpr std::size_t kViewportsPerAnchor = 9;

class AnchorIndex {
 public:
  constexpr AnchorIndex() = default;
  constexpr explicit AnchorIndex(int index) : index_(static_cast<std::uint8_t>(index)) {
    if (index < 1 || index > kAnchorCount) {
      throw std::out_of_range("anchor index must be in 1..8");
    }
  }

  constexpr int value() const { return index_; }
  // Zero-based slot, for indexing HopAddress and tables.
  constexpr std::size_t slot() const { return static_cast<std::size_t>(index_ - 1); }

  friend constexpr bool operator==(AnchorIndex, AnchorIndex) = default;
  friend constexpr auto operator<=>(AnchorIndex, AnchorIndex) = default;

 private:
  std::uint8_t index_ = 1;
};

struct CornerBits {
  std::uint8_t x, y, z;
  friend constexpr bool operator==(CornerBits, CornerBits) = default;
};

constexpr CornerBits corner_bits(AnchorIndex a) {
  constexpr std::array<CornerBits, kAnchorCount> table{{
      {0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
      {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1},
  }};
  return table[a.slot()];
}

constexpr int differing_axes(AnchorIndex a, AnchorIndex b) {
  const auto ca = corner_bits(a);
  const auto cb = corner_bits(b);
  return (ca.x != cb.x) + (ca.y != cb.y) + (ca.z != cb.z);
}

// True when the three corners share one face of the box.
constexpr bool on_common_face(AnchorIndex a, AnchorIndex b, AnchorIndex c) {
  const auto ca = corner_bits(a), cb = corner_bits(b), cc = corner_bits(c);
  return (ca.x == cb.x && cb.x == cc.x) || (ca.y == cb.y && cb.y == cc.y) ||
         (ca.z == cb.z && cb.z == cc.z);
}

// A coordinate system for one packet route: three anchors sharing a face of
// the box. The stored order is the order of the components of every
// UsableAddress taken under this viewport; routing puts the anchor best
// aligned with the pair first.
struct Viewport {
  AnchorIndex a_dot;
  AnchorIndex a_ddot;
  AnchorIndex a_dddot;

  constexpr bool contains(AnchorIndex a) const { return a == a_dot || a == a_ddot || a == a_dddot; }
  constexpr std::array<AnchorIndex, 3> anchors() const { return {a_dot, a_ddot, a_dddot}; }

  friend constexpr bool operator==(const Viewport&, const Viewport&) = default;
};

constexpr bool is_valid_viewport(const Viewport& vp) {
  if (vp.a_dot == vp.a_ddot || vp.a_dot == vp.a_dddot || vp.a_ddot == vp.a_dddot) return false;
  return on_common_face(vp.a_dot, vp.a_ddot, vp.a_dddot);
}

constexpr bool same_anchors(const Viewport& a, const Viewport& b) {
  return a.contains(b.a_dot) && a.contains(b.a_ddot) && a.contains(b.a_dddot);
}

// The corner one edge away from both others.
constexpr AnchorIndex right_angle_corner(const Viewport& vp) {
  if (differing_axes(vp.a_dot, vp.a_ddot) == 1 && differing_axes(vp.a_dot, vp.a_dddot) == 1) return vp.a_dot;
  if (differing_axes(vp.a_ddot, vp.a_dot) == 1 && differing_axes(vp.a_ddot, vp.a_dddot) == 1) return vp.a_ddot;
  return vp.a_dddot;
}

// `first`, then the other two anchors of vp in ascending index order.
constexpr Viewport oriented(const Viewport& vp, AnchorIndex first) {
  if (!vp.contains(first)) throw std::invalid_argument("anchor is not part of the viewport");
  std::array<AnchorIndex, 2> rest{};
  std::size_t n = 0;
  for (auto a : vp.anchors()) {
    if (a != first) rest[n++] = a;
  }
  if (rest[1] < rest[0]) std::swap(rest[0], rest[1]);
  return {first, rest[0], rest[1]};
}

// All face triples, in lexicographic order of their sorted anchor indices,
// each with its right-angle corner first.
constexpr std::array<Viewport, kViewportCount> enumerate_viewports() {
  std::array<Viewport, kViewportCount> out{};
  std::size_t n = 0;
  for (int i = 1; i <= kAnchorCount; ++i) {
    for (int j = i + 1; j <= kAnchorCount; ++j) {
      for (int k = j + 1; k <= kAnchorCount; ++k) {
        const Viewport vp{AnchorIndex{i}, AnchorIndex{j}, AnchorIndex{k}};
        if (!on_common_face(vp.a_dot, vp.a_ddot, vp.a_dddot)) continue;
        out[n++] = oriented(vp, right_angle_corner(vp));
      }
    }
  }
  if (n != kViewportCount) throw std::logic_error("viewport enumeration miscounted");
  return out;
}

inline constexpr std::array<Viewport, kViewportCount> kViewports = enumerate_viewports();

// Position in kViewports of the triple holding vp's anchors, in any order;
// nullopt when they share no face.
constexpr std::optional<std::size_t> viewport_ordinal(const Viewport& vp) {
  for (std::size_t i = 0; i < kViewportCount; ++i) {
    if (same_anchors(kViewports[i], vp)) return i;
  }
  return std::nullopt;
}

// Ordinals of the 9 viewports containing `a`, in enumeration order.
constexpr std::array<std::size_t, kViewportsPerAnchor> viewports_containing(AnchorIndex a) {
  std::array<std::size_t, kViewportsPerAnchor> out{};
  std::size_t n = 0;
  for (std::size_t i = 0; i < kViewportCount; ++i) {
    if (kViewports[i].contains(a)) out[n++] = i;
  }
  if (n != kViewportsPerAnchor) throw std::logic_error("anchor viewport count mismatch");
  return out;
}

// Hop-count distances under one viewport, in the viewport's anchor order.
struct UsableAddress {
  std::uint16_t r_dot = 0;
  std::uint16_t r_ddot = 0;
  std::uint16_t r_dddot = 0;

  friend constexpr bool operator==(const UsableAddress&, const UsableAddress&) = default;
  friend constexpr auto operator<=>(const UsableAddress&, const UsableAddress&) = default;
};

// A node's hop distances to A1..A8. Components stay kUnset until the setup
// flood for that anchor reaches the node.
struct HopAddress {
  static constexpr std::uint16_t kUnset = 0xFFFF;

  std::array<std::uint16_t, kAnchorCount> r{kUnset, kUnset, kUnset, kUnset,
                                            kUnset, kUnset, kUnset, kUnset};

  constexpr std::uint16_t operator[](AnchorIndex a) const { return r[a.slot()]; }
  constexpr std::uint16_t& operator[](AnchorIndex a) { return r[a.slot()]; }

  constexpr bool has(AnchorIndex a) const { return r[a.slot()] != kUnset; }
  constexpr bool complete() const {
    for (auto v : r) {
      if (v == kUnset) return false;
    }
    return true;
  }

  friend constexpr bool operator==(const HopAddress&, const HopAddress&) = default;
  friend constexpr auto operator<=>(const HopAddress&, const HopAddress&) = default;
};

constexpr UsableAddress project(const HopAddress& addr, const Viewport& vp) {
  return {addr[vp.a_dot], addr[vp.a_ddot], addr[vp.a_dddot]};
}

}  // namespace slr::coords
