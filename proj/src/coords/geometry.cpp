#include "slr/coords/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace slr::coords {

namespace {

// Viewport laid out in the inversion frame: which box axis each anchor edge
// runs along, and which side of the box the right-angle corner sits on.
struct FrameAxes {
  int u_axis;  // corner -> first other anchor
  int w_axis;  // corner -> second other anchor
  int v_axis;  // face normal
  CornerBits origin;
};

int axis_between(AnchorIndex a, AnchorIndex b) {
  const auto ca = corner_bits(a), cb = corner_bits(b);
  if (ca.x != cb.x) return 0;
  if (ca.y != cb.y) return 1;
  return 2;
}

int bit_on(const CornerBits& c, int axis) { return axis == 0 ? c.x : axis == 1 ? c.y : c.z; }

// `canonical` has its right-angle corner first.
FrameAxes frame_of(const Viewport& canonical) {
  FrameAxes f{};
  f.u_axis = axis_between(canonical.a_dot, canonical.a_ddot);
  f.w_axis = axis_between(canonical.a_dot, canonical.a_dddot);
  f.v_axis = 3 - f.u_axis - f.w_axis;
  f.origin = corner_bits(canonical.a_dot);
  return f;
}

double distance_to(const CurvilinearPos& ua, const Viewport& vp, AnchorIndex a) {
  if (a == vp.a_dot) return ua.r_dot;
  if (a == vp.a_ddot) return ua.r_ddot;
  return ua.r_dddot;
}

// Distance from the origin corner along `axis`, given a box coordinate.
double local_from_box(double coord, int origin_bit, double len) {
  return origin_bit == 0 ? coord : len - coord;
}

}  // namespace

SpaceDims::SpaceDims(double x, double y, double z) : x_len(x), y_len(y), z_len(z) {
  if (!(x > 0.0) || !(y > 0.0) || !(z > 0.0)) {
    throw std::invalid_argument("space side lengths must be strictly positive");
  }
}

double SpaceDims::along(int axis) const { return axis == 0 ? x_len : axis == 1 ? y_len : z_len; }

double SpaceDims::diagonal() const { return std::sqrt(x_len * x_len + y_len * y_len + z_len * z_len); }

double CartesianPos::along(int axis) const { return axis == 0 ? x : axis == 1 ? y : z; }

double& CartesianPos::along(int axis) { return axis == 0 ? x : axis == 1 ? y : z; }

double distance(const CartesianPos& a, const CartesianPos& b) {
  const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

bool inside(const CartesianPos& p, const SpaceDims& dims) {
  return p.x >= 0.0 && p.x <= dims.x_len && p.y >= 0.0 && p.y <= dims.y_len && p.z >= 0.0 &&
         p.z <= dims.z_len;
}

CartesianPos anchor_position(AnchorIndex a, const SpaceDims& dims) {
  const auto c = corner_bits(a);
  return {c.x ? dims.x_len : 0.0, c.y ? dims.y_len : 0.0, c.z ? dims.z_len : 0.0};
}

CurvilinearPos cartesian_to_curvilinear(const CartesianPos& p, const Viewport& vp,
                                        const SpaceDims& dims) {
  return {distance(p, anchor_position(vp.a_dot, dims)), distance(p, anchor_position(vp.a_ddot, dims)),
          distance(p, anchor_position(vp.a_dddot, dims))};
}

CartesianPos curvilinear_to_cartesian(const CurvilinearPos& ua, const Viewport& vp,
                                      const SpaceDims& dims) {
  if (!is_valid_viewport(vp)) throw std::invalid_argument("viewport anchors do not share a face");
  const Viewport canonical = oriented(vp, right_angle_corner(vp));
  const FrameAxes f = frame_of(canonical);
  const double lu = dims.along(f.u_axis);
  const double lw = dims.along(f.w_axis);
  const double lv = dims.along(f.v_axis);

  const double r_c = distance_to(ua, vp, canonical.a_dot);
  const double r_u = distance_to(ua, vp, canonical.a_ddot);
  const double r_w = distance_to(ua, vp, canonical.a_dddot);
  const double r0 = r_c * r_c;
  const double u = (r0 - r_u * r_u + lu * lu) / (2.0 * lu);
  const double w = (r0 - r_w * r_w + lw * lw) / (2.0 * lw);
  double radicand = r0 - u * u - w * w;

  // Float noise near the face plane; the absolute floor covers r_dot == 0.
  const double tol = 1e-9 * std::max(r0, 1e-12 * (lu * lu + lw * lw));
  if (radicand < 0.0) {
    if (radicand < -tol) throw InfeasibleTriple("no point has these anchor distances");
    radicand = 0.0;
  }
  const double v = std::sqrt(radicand);

  const double slack = 1e-9 * dims.diagonal();
  if (u < -slack || u > lu + slack || w < -slack || w > lw + slack || v > lv + slack) {
    throw InfeasibleTriple("anchor distances place the point outside the space");
  }

  CartesianPos out;
  out.along(f.u_axis) = local_from_box(std::clamp(u, 0.0, lu), bit_on(f.origin, f.u_axis), lu);
  out.along(f.w_axis) = local_from_box(std::clamp(w, 0.0, lw), bit_on(f.origin, f.w_axis), lw);
  out.along(f.v_axis) = local_from_box(std::clamp(v, 0.0, lv), bit_on(f.origin, f.v_axis), lv);
  return out;
}

int ideal_hop_distance(const CartesianPos& p, AnchorIndex a, const SpaceDims& dims, double hop_len) {
  if (!(hop_len > 0.0)) throw std::invalid_argument("hop length must be positive");
  const double q = distance(p, anchor_position(a, dims)) / hop_len;
  const double nearest = std::round(q);
  if (std::abs(q - nearest) <= 1e-9 * std::max(1.0, q)) return static_cast<int>(nearest);
  return static_cast<int>(std::ceil(q));
}

}  // namespace slr::coords
