#include "slr/netsim/packets.hpp"

namespace slr::netsim {

namespace {

class BitWriter {
 public:
  void put(std::uint32_t value, int bits) {
    for (int b = bits - 1; b >= 0; --b) {
      if (used_ % 8 == 0) bytes_.push_back(0);
      if ((value >> b) & 1U) bytes_.back() |= static_cast<std::uint8_t>(0x80U >> (used_ % 8));
      ++used_;
    }
  }
  std::vector<std::uint8_t> take() { return std::move(bytes_); }

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t used_ = 0;
};

class BitReader {
 public:
  explicit BitReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}
  std::uint32_t get(int bits) {
    std::uint32_t v = 0;
    for (int b = 0; b < bits; ++b) {
      if (pos_ / 8 >= bytes_.size()) throw WireError("truncated packet");
      v = (v << 1) | ((bytes_[pos_ / 8] >> (7 - pos_ % 8)) & 1U);
      ++pos_;
    }
    return v;
  }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

void put_anchor(BitWriter& w, coords::AnchorIndex a) { w.put(static_cast<std::uint32_t>(a.value() - 1), 3); }

coords::AnchorIndex get_anchor(BitReader& r) { return coords::AnchorIndex{static_cast<int>(r.get(3)) + 1}; }

void put_ua(BitWriter& w, const coords::UsableAddress& ua) {
  for (auto v : {ua.r_dot, ua.r_ddot, ua.r_dddot}) {
    if (v > kMaxWireHop) throw WireError("usable address component exceeds 8 bits");
    w.put(v, 8);
  }
}

coords::UsableAddress get_ua(BitReader& r) {
  coords::UsableAddress ua;
  ua.r_dot = static_cast<std::uint16_t>(r.get(8));
  ua.r_ddot = static_cast<std::uint16_t>(r.get(8));
  ua.r_dddot = static_cast<std::uint16_t>(r.get(8));
  return ua;
}

}  // namespace

std::vector<std::uint8_t> encode(const SetupPacket& p) {
  BitWriter w;
  w.put(1, 1);
  put_anchor(w, p.anchor);
  w.put(p.hop_count, 16);
  return w.take();
}

std::vector<std::uint8_t> encode(const DataPacket& p) {
  if (!coords::is_valid_viewport(p.cs)) throw WireError("CS field is not a valid viewport");
  BitWriter w;
  w.put(0, 1);
  w.put(p.packet_id, 8);
  put_anchor(w, p.cs.a_dot);
  put_anchor(w, p.cs.a_ddot);
  put_anchor(w, p.cs.a_dddot);
  put_ua(w, p.ua1);
  put_ua(w, p.ua2);
  w.put(static_cast<std::uint32_t>(p.m.value()), 4);
  auto bytes = w.take();
  bytes.insert(bytes.end(), p.payload.begin(), p.payload.end());
  return bytes;
}

bool is_setup(std::span<const std::uint8_t> bytes) {
  if (bytes.empty()) throw WireError("empty packet");
  return (bytes[0] & 0x80U) != 0;
}

SetupPacket decode_setup(std::span<const std::uint8_t> bytes) {
  BitReader r(bytes);
  if (r.get(1) != 1) throw WireError("setup flag not set");
  SetupPacket p;
  p.anchor = get_anchor(r);
  p.hop_count = static_cast<std::uint16_t>(r.get(16));
  return p;
}

DataPacket decode_data(std::span<const std::uint8_t> bytes) {
  BitReader r(bytes);
  if (r.get(1) != 0) throw WireError("setup flag set on a data packet");
  DataPacket p;
  p.packet_id = static_cast<std::uint8_t>(r.get(8));
  const auto a = get_anchor(r);
  const auto b = get_anchor(r);
  const auto c = get_anchor(r);
  p.cs = {a, b, c};
  if (!coords::is_valid_viewport(p.cs)) throw WireError("CS field is not a valid viewport");
  p.ua1 = get_ua(r);
  p.ua2 = get_ua(r);
  const auto m = static_cast<int>(r.get(4));
  if (m < 1) throw WireError("path width must be at least 1");
  p.m = routing::PathWidth{m};
  p.payload.assign(bytes.begin() + kDataHeaderBytes, bytes.end());
  return p;
}

}  // namespace slr::netsim
