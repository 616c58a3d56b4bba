#include "nakamoto/crypto/digest.hpp"

#include <openssl/evp.h>

namespace nakamoto::crypto {

namespace {

const EVP_MD* sha256_md() {
  static EVP_MD* md = EVP_MD_fetch(nullptr, "SHA256", nullptr);
  return md;
}

const EVP_MD* sha512_md() {
  static EVP_MD* md = EVP_MD_fetch(nullptr, "SHA512", nullptr);
  return md;
}

}  // namespace

DigestLength digest_length_from_bytes(std::size_t n) {
  switch (n) {
    case 16:
      return DigestLength::short16;
    case 32:
      return DigestLength::sha256;
    case 64:
      return DigestLength::sha512;
    default:
      throw std::invalid_argument("unsupported digest length " + std::to_string(n));
  }
}

Digest digest(ByteView data, DigestLength len) {
  const EVP_MD* md = len == DigestLength::sha512 ? sha512_md() : sha256_md();
  // One context per thread, reset by each init; allocating a fresh one per
  // call dominated simulation time.
  struct Ctx {
    EVP_MD_CTX* p = EVP_MD_CTX_new();
    ~Ctx() { EVP_MD_CTX_free(p); }
  };
  thread_local Ctx ctx;
  unsigned char out[EVP_MAX_MD_SIZE];
  unsigned int out_len = 0;
  if (EVP_DigestInit_ex(ctx.p, md, nullptr) != 1 || EVP_DigestUpdate(ctx.p, data.data(), data.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.p, out, &out_len) != 1)
    throw std::runtime_error("EVP_Digest failed");
  std::size_t n = static_cast<std::size_t>(len);
  return Digest{Bytes(out, out + n)};
}

Sha256Stream::Sha256Stream() : ctx_(EVP_MD_CTX_new()) {
  EVP_DigestInit_ex(static_cast<EVP_MD_CTX*>(ctx_), sha256_md(), nullptr);
}

Sha256Stream::~Sha256Stream() { EVP_MD_CTX_free(static_cast<EVP_MD_CTX*>(ctx_)); }

void Sha256Stream::update(ByteView data) {
  EVP_DigestUpdate(static_cast<EVP_MD_CTX*>(ctx_), data.data(), data.size());
}

void Sha256Stream::update(std::string_view text) {
  EVP_DigestUpdate(static_cast<EVP_MD_CTX*>(ctx_), text.data(), text.size());
}

Digest Sha256Stream::finish() {
  unsigned char out[EVP_MAX_MD_SIZE];
  unsigned int out_len = 0;
  EVP_DigestFinal_ex(static_cast<EVP_MD_CTX*>(ctx_), out, &out_len);
  return Digest{Bytes(out, out + out_len)};
}

}  // namespace nakamoto::crypto
