#include "nakamoto/crypto/bytes.hpp"

namespace nakamoto::crypto {

std::string to_hex(ByteView bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  s.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    s += kDigits[b >> 4];
    s += kDigits[b & 0xf];
  }
  return s;
}

Bytes from_hex(std::string_view hex) {
  auto nibble = [&](char c) -> std::uint8_t {
    if (c >= '0' && c <= '9') return static_cast<std::uint8_t>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<std::uint8_t>(c - 'a' + 10);
    if (c >= 'A' && c <= 'F') return static_cast<std::uint8_t>(c - 'A' + 10);
    throw DecodeError("invalid hex digit in '" + std::string(hex) + "'");
  };
  if (hex.size() % 2 != 0) throw DecodeError("odd-length hex string");
  Bytes out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = static_cast<std::uint8_t>(nibble(hex[2 * i]) << 4 | nibble(hex[2 * i + 1]));
  return out;
}

boost::multiprecision::cpp_int be_to_int(ByteView bytes) {
  boost::multiprecision::cpp_int v;
  if (!bytes.empty())
    boost::multiprecision::import_bits(v, bytes.begin(), bytes.end(), 8, true);
  return v;
}

Bytes int_to_be(const boost::multiprecision::cpp_int& v) {
  Bytes out;
  if (v.is_zero()) return out;
  boost::multiprecision::export_bits(v, std::back_inserter(out), 8, true);
  return out;
}

void ByteWriter::u32(std::uint32_t v) {
  for (int i = 3; i >= 0; --i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteWriter::u64(std::uint64_t v) {
  for (int i = 7; i >= 0; --i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteWriter::u128(const boost::multiprecision::uint128_t& v) {
  u64(static_cast<std::uint64_t>(v >> 64));
  u64(static_cast<std::uint64_t>(v & std::numeric_limits<std::uint64_t>::max()));
}

void ByteWriter::blob(ByteView b) {
  u32(static_cast<std::uint32_t>(b.size()));
  raw(b);
}

ByteView ByteReader::raw(std::size_t n) {
  if (remaining() < n)
    throw DecodeError("truncated input: need " + std::to_string(n) + " bytes at offset " +
                      std::to_string(pos_));
  ByteView v = in_.subspan(pos_, n);
  pos_ += n;
  return v;
}

std::uint8_t ByteReader::u8() { return raw(1)[0]; }

std::uint32_t ByteReader::u32() {
  std::uint32_t v = 0;
  for (std::uint8_t b : raw(4)) v = v << 8 | b;
  return v;
}

std::uint64_t ByteReader::u64() {
  std::uint64_t v = 0;
  for (std::uint8_t b : raw(8)) v = v << 8 | b;
  return v;
}

boost::multiprecision::uint128_t ByteReader::u128() {
  boost::multiprecision::uint128_t hi = u64();
  boost::multiprecision::uint128_t lo = u64();
  return hi << 64 | lo;
}

Bytes ByteReader::blob() {
  std::uint32_t n = u32();
  ByteView v = raw(n);
  return Bytes(v.begin(), v.end());
}

}  // namespace nakamoto::crypto
