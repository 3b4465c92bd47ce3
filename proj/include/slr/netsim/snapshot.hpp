#pragma once

// Field snapshot: a '#'-prefixed header line, then one comma-separated record
// per node:
//
//   id,x,y,z,active,r1,r2,r3,r4,r5,r6,r7,r8
//
// Positions in metres with 9 significant digits after the point in
// scientific notation; active is 0/1; unset distances are -1.

#include <iosfwd>
#include <string>
#include <vector>

#include "slr/netsim/field.hpp"

namespace slr::netsim {

struct SnapshotRecord {
  NodeId id = 0;
  coords::CartesianPos pos;
  bool active = true;
  coords::HopAddress address;

  friend bool operator==(const SnapshotRecord&, const SnapshotRecord&) = default;
};

void write_snapshot(std::ostream& os, const Field& field);
std::vector<SnapshotRecord> read_snapshot(std::istream& is);

}  // namespace slr::netsim
