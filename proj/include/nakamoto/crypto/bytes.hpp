#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nakamoto::crypto {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

std::string to_hex(ByteView bytes);
Bytes from_hex(std::string_view hex);

/// Big-endian unsigned interpretation.
boost::multiprecision::cpp_int be_to_int(ByteView bytes);
/// Minimal big-endian encoding (empty for zero).
Bytes int_to_be(const boost::multiprecision::cpp_int& v);

class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Appends fixed-width big-endian fields.
class ByteWriter {
 public:
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u32(std::uint32_t v);
  void u64(std::uint64_t v);
  void u128(const boost::multiprecision::uint128_t& v);
  void raw(ByteView b) { out_.insert(out_.end(), b.begin(), b.end()); }
  /// 4-byte length prefix followed by the bytes.
  void blob(ByteView b);

  const Bytes& bytes() const { return out_; }
  Bytes take() { return std::move(out_); }

 private:
  Bytes out_;
};

class ByteReader {
 public:
  explicit ByteReader(ByteView in) : in_(in) {}

  std::uint8_t u8();
  std::uint32_t u32();
  std::uint64_t u64();
  boost::multiprecision::uint128_t u128();
  ByteView raw(std::size_t n);
  Bytes blob();

  std::size_t remaining() const { return in_.size() - pos_; }
  std::size_t position() const { return pos_; }

 private:
  ByteView in_;
  std::size_t pos_ = 0;
};

template <std::size_t N>
std::array<std::uint8_t, N> to_array(ByteView b) {
  if (b.size() != N) throw DecodeError("expected " + std::to_string(N) + " bytes");
  std::array<std::uint8_t, N> a{};
  std::copy(b.begin(), b.end(), a.begin());
  return a;
}

}  // namespace nakamoto::crypto
