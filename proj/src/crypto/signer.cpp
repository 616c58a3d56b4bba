#include "nakamoto/crypto/signer.hpp"

#include <memory>

#include <openssl/evp.h>

#include "nakamoto/crypto/digest.hpp"

namespace nakamoto::crypto {

Address Address::from_hex(std::string_view hex) {
  Bytes b = crypto::from_hex(hex);
  if (b.size() != 32) throw CryptoError(CryptoError::Kind::malformed_key, "address must be 32 bytes");
  Address a;
  std::copy(b.begin(), b.end(), a.bytes.begin());
  return a;
}

std::string to_string(SignatureScheme s) { return s == SignatureScheme::ed25519 ? "ed25519" : "null"; }

SignatureScheme signature_scheme_from_string(std::string_view s) {
  if (s == "ed25519") return SignatureScheme::ed25519;
  if (s == "null") return SignatureScheme::null;
  throw std::invalid_argument("unknown signature scheme '" + std::string(s) + "'");
}

KeyPair Signer::generate(Rng& rng) const {
  KeyPair kp;
  Bytes b = rng.bytes(32);
  std::copy(b.begin(), b.end(), kp.secret.bytes.begin());
  kp.address = derive_address(kp.secret);
  return kp;
}

namespace {

struct PkeyDeleter {
  void operator()(EVP_PKEY* p) const { EVP_PKEY_free(p); }
};
struct MdCtxDeleter {
  void operator()(EVP_MD_CTX* p) const { EVP_MD_CTX_free(p); }
};
using PkeyPtr = std::unique_ptr<EVP_PKEY, PkeyDeleter>;
using MdCtxPtr = std::unique_ptr<EVP_MD_CTX, MdCtxDeleter>;

class Ed25519Signer final : public Signer {
 public:
  SignatureScheme scheme() const override { return SignatureScheme::ed25519; }

  Address derive_address(const SecretKey& secret) const override {
    PkeyPtr key = private_key(secret);
    Address a;
    std::size_t len = a.bytes.size();
    if (EVP_PKEY_get_raw_public_key(key.get(), a.bytes.data(), &len) != 1 || len != 32)
      throw CryptoError(CryptoError::Kind::malformed_key, "cannot derive ed25519 public key");
    return a;
  }

  Signature sign(const SecretKey& secret, ByteView message) const override {
    PkeyPtr key = private_key(secret);
    MdCtxPtr ctx(EVP_MD_CTX_new());
    Signature sig(64);
    std::size_t len = sig.size();
    if (EVP_DigestSignInit(ctx.get(), nullptr, nullptr, nullptr, key.get()) != 1 ||
        EVP_DigestSign(ctx.get(), sig.data(), &len, message.data(), message.size()) != 1)
      throw CryptoError(CryptoError::Kind::malformed_key, "ed25519 signing failed");
    sig.resize(len);
    return sig;
  }

  bool verify(const Address& address, ByteView message, ByteView sig) const override {
    if (sig.size() != 64)
      throw CryptoError(CryptoError::Kind::malformed_signature, "ed25519 signature must be 64 bytes");
    PkeyPtr key(EVP_PKEY_new_raw_public_key(EVP_PKEY_ED25519, nullptr, address.bytes.data(),
                                            address.bytes.size()));
    if (!key) throw CryptoError(CryptoError::Kind::malformed_key, "invalid ed25519 public key");
    MdCtxPtr ctx(EVP_MD_CTX_new());
    if (EVP_DigestVerifyInit(ctx.get(), nullptr, nullptr, nullptr, key.get()) != 1) return false;
    return EVP_DigestVerify(ctx.get(), sig.data(), sig.size(), message.data(), message.size()) == 1;
  }

 private:
  static PkeyPtr private_key(const SecretKey& secret) {
    PkeyPtr key(EVP_PKEY_new_raw_private_key(EVP_PKEY_ED25519, nullptr, secret.bytes.data(),
                                             secret.bytes.size()));
    if (!key) throw CryptoError(CryptoError::Kind::malformed_key, "invalid ed25519 secret key");
    return key;
  }
};

class NullSigner final : public Signer {
 public:
  SignatureScheme scheme() const override { return SignatureScheme::null; }

  Address derive_address(const SecretKey& secret) const override {
    Digest d = digest(secret.bytes);
    Address a;
    std::copy(d.bytes.begin(), d.bytes.end(), a.bytes.begin());
    return a;
  }

  Signature sign(const SecretKey& secret, ByteView message) const override {
    return binding(derive_address(secret), message);
  }

  bool verify(const Address& address, ByteView message, ByteView sig) const override {
    if (sig.size() != 32)
      throw CryptoError(CryptoError::Kind::malformed_signature, "null signature must be 32 bytes");
    Signature expected = binding(address, message);
    return std::equal(expected.begin(), expected.end(), sig.begin());
  }

 private:
  static Signature binding(const Address& address, ByteView message) {
    Bytes buf(address.bytes.begin(), address.bytes.end());
    buf.insert(buf.end(), message.begin(), message.end());
    return digest(buf).bytes;
  }
};

}  // namespace

const Signer& signer_for(SignatureScheme scheme) {
  static const Ed25519Signer ed;
  static const NullSigner null;
  if (scheme == SignatureScheme::ed25519) return ed;
  return null;
}

}  // namespace nakamoto::crypto
