#pragma once

#include <compare>
#include <string>

#include "nakamoto/crypto/bytes.hpp"

namespace nakamoto::crypto {

/// Supported digest lengths in bytes: 16 (SHA-256 truncated), 32 (SHA-256),
/// 64 (SHA-512, the "stronger basis" option).
enum class DigestLength : std::uint8_t { short16 = 16, sha256 = 32, sha512 = 64 };

DigestLength digest_length_from_bytes(std::size_t n);

struct Digest {
  Bytes bytes;

  bool empty() const { return bytes.empty(); }
  std::size_t size() const { return bytes.size(); }
  std::string hex() const { return to_hex(bytes); }

  friend bool operator==(const Digest&, const Digest&) = default;
  friend auto operator<=>(const Digest&, const Digest&) = default;
};

Digest digest(ByteView data, DigestLength len = DigestLength::sha256);

/// Incremental SHA-256, used for running trace digests.
class Sha256Stream {
 public:
  Sha256Stream();
  ~Sha256Stream();
  Sha256Stream(const Sha256Stream&) = delete;
  Sha256Stream& operator=(const Sha256Stream&) = delete;

  void update(ByteView data);
  void update(std::string_view text);
  Digest finish();

 private:
  void* ctx_;
};

}  // namespace nakamoto::crypto
