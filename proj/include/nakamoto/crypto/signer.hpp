#pragma once

#include <array>
#include <compare>
#include <stdexcept>
#include <string>

#include "nakamoto/crypto/bytes.hpp"
#include "nakamoto/crypto/rng.hpp"

namespace nakamoto::crypto {

/// Public key bytes; this is the account identifier.
struct Address {
  std::array<std::uint8_t, 32> bytes{};

  std::string hex() const { return to_hex(bytes); }
  static Address from_hex(std::string_view hex);

  friend bool operator==(const Address&, const Address&) = default;
  friend auto operator<=>(const Address&, const Address&) = default;
};

struct SecretKey {
  std::array<std::uint8_t, 32> bytes{};
};

struct KeyPair {
  Address address;
  SecretKey secret;
};

using Signature = Bytes;

enum class SignatureScheme : std::uint8_t { ed25519, null };

std::string to_string(SignatureScheme s);
SignatureScheme signature_scheme_from_string(std::string_view s);

class CryptoError : public std::runtime_error {
 public:
  enum class Kind { malformed_key, malformed_signature };
  CryptoError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Signature backend.
///
/// Two backends ship. `ed25519` is a real asymmetric scheme (deterministic
/// signatures, so simulation traces stay reproducible). `null` is a test
/// backend: the address is SHA-256(secret) and a signature is
/// SHA-256(address || message). It binds a message to an address for
/// integrity checks only; anyone can forge it.
class Signer {
 public:
  virtual ~Signer() = default;

  virtual SignatureScheme scheme() const = 0;
  virtual Address derive_address(const SecretKey& secret) const = 0;
  virtual Signature sign(const SecretKey& secret, ByteView message) const = 0;
  /// Throws CryptoError for a malformed key or signature encoding.
  virtual bool verify(const Address& address, ByteView message, ByteView sig) const = 0;

  /// Fresh pair from 32 rng bytes.
  KeyPair generate(Rng& rng) const;
};

const Signer& signer_for(SignatureScheme scheme);

inline KeyPair gen_keypair(Rng& rng, SignatureScheme scheme = SignatureScheme::ed25519) {
  return signer_for(scheme).generate(rng);
}

}  // namespace nakamoto::crypto
