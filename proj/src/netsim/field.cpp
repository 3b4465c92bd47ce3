#include "slr/netsim/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "slr/netsim/random.hpp"

namespace slr::netsim {

Field::Field(coords::SpaceDims dims, std::array<int, 3> points_per_axis, std::vector<Node> nodes)
    : dims_(dims), points_(points_per_axis), nodes_(std::move(nodes)) {
  if (nodes_.size() != static_cast<std::size_t>(points_[0]) * points_[1] * points_[2]) {
    throw std::invalid_argument("node list does not match the lattice size");
  }
  for (int a = 1; a <= coords::kAnchorCount; ++a) {
    const coords::AnchorIndex idx{a};
    const auto c = coords::corner_bits(idx);
    const NodeId id = id_of({c.x ? points_[0] - 1 : 0, c.y ? points_[1] - 1 : 0, c.z ? points_[2] - 1 : 0});
    anchors_[idx.slot()] = id;
    nodes_[id].anchor = idx;
  }
}

double Field::spacing(int axis) const { return dims_.along(axis) / (points_[axis] - 1); }

NodeId Field::id_of(const LatticeIndex& c) const {
  return static_cast<NodeId>(c.i + points_[0] * (c.j + points_[1] * c.k));
}

std::size_t Field::active_count() const {
  return static_cast<std::size_t>(std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.active; }));
}

std::size_t Field::addressed_count() const {
  return static_cast<std::size_t>(std::count_if(
      nodes_.begin(), nodes_.end(), [](const Node& n) { return n.active && n.address.complete(); }));
}

std::vector<coords::HopAddress> Field::addresses() const {
  std::vector<coords::HopAddress> out;
  out.reserve(nodes_.size());
  for (const auto& n : nodes_) out.push_back(n.address);
  return out;
}

void Field::deactivate(double ratio, std::uint64_t seed) {
  if (!(ratio >= 0.0 && ratio <= 1.0)) throw std::invalid_argument("deactivation ratio must lie in [0, 1]");
  std::vector<NodeId> candidates;
  for (auto& n : nodes_) {
    n.active = true;
    if (!n.anchor) candidates.push_back(n.id);
  }
  const auto off = static_cast<std::size_t>(std::floor(ratio * static_cast<double>(candidates.size())));
  Rng rng(mix_keys({seed, 0xDEAC7ULL}));
  rng.shuffle(candidates);
  for (std::size_t i = 0; i < off; ++i) nodes_[candidates[i]].active = false;
}

Field build_field(const SimConfig& cfg) {
  cfg.validate();
  std::array<int, 3> points{};
  for (int axis = 0; axis < 3; ++axis) {
    points[axis] = static_cast<int>(std::lround(cfg.dims.along(axis) / cfg.grid_spacing)) + 1;
  }
  std::vector<Node> nodes;
  nodes.reserve(static_cast<std::size_t>(points[0]) * points[1] * points[2]);
  NodeId id = 0;
  for (int k = 0; k < points[2]; ++k) {
    for (int j = 0; j < points[1]; ++j) {
      for (int i = 0; i < points[0]; ++i) {
        Node n;
        n.id = id++;
        n.cell = {i, j, k};
        // Exact corners: divide the side rather than accumulate the spacing.
        n.pos = {cfg.dims.x_len * i / (points[0] - 1), cfg.dims.y_len * j / (points[1] - 1),
                 cfg.dims.z_len * k / (points[2] - 1)};
        nodes.push_back(n);
      }
    }
  }
  Field field(cfg.dims, points, std::move(nodes));
  field.deactivate(cfg.deactivation_ratio, cfg.seed);
  return field;
}

}  // namespace slr::netsim
