#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "slr/coords/anchors.hpp"
#include "slr/coords/geometry.hpp"
#include "slr/netsim/config.hpp"

namespace slr::netsim {

using NodeId = std::uint32_t;

struct LatticeIndex {
  int i = 0, j = 0, k = 0;
  friend constexpr bool operator==(const LatticeIndex&, const LatticeIndex&) = default;
};

struct Node {
  NodeId id = 0;
  coords::CartesianPos pos;
  LatticeIndex cell;
  bool active = true;
  coords::HopAddress address;
  std::optional<coords::AnchorIndex> anchor;
};

// The node population. Nodes sit on a regular lattice (the random layout is
// the lattice with a seeded subset switched off); ids run x-fastest.
class Field {
 public:
  Field(coords::SpaceDims dims, std::array<int, 3> points_per_axis, std::vector<Node> nodes);

  const coords::SpaceDims& dims() const { return dims_; }
  const std::array<int, 3>& points_per_axis() const { return points_; }
  double spacing(int axis) const;

  std::size_t size() const { return nodes_.size(); }
  std::span<const Node> nodes() const { return nodes_; }
  std::span<Node> nodes_mutable() { return nodes_; }
  const Node& node(NodeId id) const { return nodes_.at(id); }
  Node& node(NodeId id) { return nodes_.at(id); }

  NodeId anchor_node(coords::AnchorIndex a) const { return anchors_[a.slot()]; }
  NodeId id_of(const LatticeIndex& c) const;

  std::size_t active_count() const;
  std::size_t addressed_count() const;  // active nodes with a complete address

  std::vector<coords::HopAddress> addresses() const;

  // Switches off exactly floor(ratio * (N - 8)) non-anchor nodes chosen by
  // seed; every other node is switched back on.
  void deactivate(double ratio, std::uint64_t seed);

 private:
  coords::SpaceDims dims_;
  std::array<int, 3> points_;
  std::vector<Node> nodes_;
  std::array<NodeId, coords::kAnchorCount> anchors_{};
};

Field build_field(const SimConfig& cfg);

}  // namespace slr::netsim
