#include "slr/netsim/snapshot.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace slr::netsim {

void write_snapshot(std::ostream& os, const Field& field) {
  os << "# id,x,y,z,active,r1,r2,r3,r4,r5,r6,r7,r8\n";
  char buf[64];
  for (const auto& n : field.nodes()) {
    os << n.id;
    for (double v : {n.pos.x, n.pos.y, n.pos.z}) {
      std::snprintf(buf, sizeof buf, ",%.9e", v);
      os << buf;
    }
    os << ',' << (n.active ? 1 : 0);
    for (auto r : n.address.r) {
      os << ',';
      if (r == coords::HopAddress::kUnset) {
        os << -1;
      } else {
        os << r;
      }
    }
    os << '\n';
  }
}

std::vector<SnapshotRecord> read_snapshot(std::istream& is) {
  std::vector<SnapshotRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::vector<std::string> cells;
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (cells.size() != 13) {
      throw std::runtime_error("snapshot line " + std::to_string(line_no) + ": expected 13 fields");
    }
    try {
      SnapshotRecord rec;
      rec.id = static_cast<NodeId>(std::stoul(cells[0]));
      rec.pos = {std::stod(cells[1]), std::stod(cells[2]), std::stod(cells[3])};
      rec.active = cells[4] == "1";
      for (std::size_t a = 0; a < 8; ++a) {
        const long v = std::stol(cells[5 + a]);
        rec.address.r[a] = v < 0 ? coords::HopAddress::kUnset : static_cast<std::uint16_t>(v);
      }
      out.push_back(rec);
    } catch (const std::logic_error&) {
      throw std::runtime_error("snapshot line " + std::to_string(line_no) + ": malformed number");
    }
  }
  return out;
}

}  // namespace slr::netsim
