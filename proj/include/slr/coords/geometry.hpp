#pragma once

// Floating-point geometry of the rectangular network space. Nothing here runs
// on the routing path; it backs field construction and test oracles.

#include <stdexcept>

#include "slr/coords/anchors.hpp"

namespace slr::coords {

struct SpaceDims {
  double x_len = 0.0;
  double y_len = 0.0;
  double z_len = 0.0;

  SpaceDims() = default;
  SpaceDims(double x, double y, double z);

  double along(int axis) const;
  double diagonal() const;

  friend bool operator==(const SpaceDims&, const SpaceDims&) = default;
};

struct CartesianPos {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double along(int axis) const;
  double& along(int axis);
};

double distance(const CartesianPos& a, const CartesianPos& b);
bool inside(const CartesianPos& p, const SpaceDims& dims);

// Real-valued distances to a viewport's anchors, in viewport order.
struct CurvilinearPos {
  double r_dot = 0.0;
  double r_ddot = 0.0;
  double r_dddot = 0.0;
};

class InfeasibleTriple : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

CartesianPos anchor_position(AnchorIndex a, const SpaceDims& dims);

CurvilinearPos cartesian_to_curvilinear(const CartesianPos& p, const Viewport& vp,
                                        const SpaceDims& dims);

// Inverts the three distance relations in the frame of the viewport's face
// (right-angle corner at the origin, the other two anchors along the face
// edges) and maps the result back into the box. The distances follow vp's
// anchor order, whatever it is. The out-of-face coordinate takes the root
// that lies inside the box.
//
// Throws InfeasibleTriple when no point matches the distances.
CartesianPos curvilinear_to_cartesian(const CurvilinearPos& ua, const Viewport& vp,
                                      const SpaceDims& dims);

// ceil(distance / hop_len), with exact multiples of hop_len mapping to the
// lower integer.
int ideal_hop_distance(const CartesianPos& p, AnchorIndex a, const SpaceDims& dims, double hop_len);

}  // namespace slr::coords
