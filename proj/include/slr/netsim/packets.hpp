#pragma once

// Wire records. Bits are packed MSB-first; the final byte of the header is
// zero-padded.
//
//   setup: flag(1)=1 | anchor(3) | hop_count(16)                      -> 3 bytes
//   data:  flag(1)=0 | id(8) | cs(3x3) | ua1(3x8) | ua2(3x8) | m(4)   -> 9 bytes
//          followed by the payload bytes
//
// Anchor indices are stored as index - 1.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "slr/coords/anchors.hpp"
#include "slr/routing/predicates.hpp"

namespace slr::netsim {

class WireError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SetupPacket {
  coords::AnchorIndex anchor;
  std::uint16_t hop_count = 0;

  friend bool operator==(const SetupPacket&, const SetupPacket&) = default;
};

struct DataPacket {
  std::uint8_t packet_id = 0;
  coords::Viewport cs;
  coords::UsableAddress ua1;
  coords::UsableAddress ua2;
  routing::PathWidth m{1};
  std::vector<std::uint8_t> payload;

  routing::RouteSpec route() const { return {cs, ua1, ua2, m}; }

  friend bool operator==(const DataPacket&, const DataPacket&) = default;
};

inline constexpr std::size_t kSetupWireBytes = 3;
inline constexpr std::size_t kDataHeaderBytes = 9;
inline constexpr int kMaxWireHop = 255;

std::vector<std::uint8_t> encode(const SetupPacket& p);
std::vector<std::uint8_t> encode(const DataPacket& p);

// The first bit selects the record type.
bool is_setup(std::span<const std::uint8_t> bytes);
SetupPacket decode_setup(std::span<const std::uint8_t> bytes);
DataPacket decode_data(std::span<const std::uint8_t> bytes);

}  // namespace slr::netsim
