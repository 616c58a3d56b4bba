#include <stdexcept>

#include "nakamoto/ledger/types.hpp"

namespace nakamoto::ledger {

using crypto::ByteReader;
using crypto::ByteWriter;

namespace {

constexpr std::uint8_t kVersion = 1;

void put_digest(ByteWriter& w, const Digest& d) {
  w.u8(static_cast<std::uint8_t>(d.size()));
  w.raw(d.bytes);
}

Digest get_digest(ByteReader& r) {
  std::uint8_t n = r.u8();
  crypto::ByteView v = r.raw(n);
  return Digest{Bytes(v.begin(), v.end())};
}

void put_entries(ByteWriter& w, const std::vector<Entry>& es) {
  w.u32(static_cast<std::uint32_t>(es.size()));
  for (const auto& e : es) {
    w.raw(e.address.bytes);
    w.u128(e.amount.quanta());
  }
}

std::vector<Entry> get_entries(ByteReader& r) {
  std::uint32_t n = r.u32();
  if (n > r.remaining() / 48) throw crypto::DecodeError("entry count exceeds input");
  std::vector<Entry> es(n);
  for (auto& e : es) {
    e.address.bytes = crypto::to_array<32>(r.raw(32));
    e.amount = Amount(r.u128());
  }
  return es;
}

void write_tx_body(ByteWriter& w, const Transaction& tx) {
  w.u8(kVersion);
  w.raw(tx.nonce);
  put_entries(w, tx.inputs);
  put_entries(w, tx.outputs);
  w.u128(tx.fee.quanta());
  w.u8(static_cast<std::uint8_t>(tx.kind));
  w.u64(tx.activation_height);
  w.u8(tx.original ? 1 : 0);
  if (tx.original) put_digest(w, *tx.original);
}

void write_block_body(ByteWriter& w, const Block& b) {
  w.u8(kVersion);
  w.u64(b.k);
  w.u8(b.prev ? 1 : 0);
  if (b.prev) put_digest(w, *b.prev);
  w.u32(static_cast<std::uint32_t>(b.txs.size()));
  for (const auto& tx : b.txs) w.blob(canonical_bytes(tx));
  const MiningStep& s = b.step;
  w.raw(s.miner.bytes);
  w.u64(s.covered);
  w.u64(s.difficulty);
  w.u128(s.fees.quanta());
  w.u128(s.reward.quanta());
  put_digest(w, s.puzzle.seed);
  w.blob(crypto::int_to_be(s.puzzle.target));
  w.u64(s.solution.s);
}

void expect_end(const ByteReader& r) {
  if (r.remaining() != 0) throw crypto::DecodeError("trailing bytes");
}

}  // namespace

std::string to_string(TxKind k) {
  switch (k) {
    case TxKind::ordinary: return "ordinary";
    case TxKind::future: return "future";
    case TxKind::conditional_future: return "conditional-future";
    case TxKind::restitution: return "restitution";
    case TxKind::key_destruction: return "key-destruction";
  }
  return "unknown";
}

Amount Transaction::input_total() const {
  Amount t;
  for (const auto& e : inputs) t += e.amount;
  return t;
}

Amount Transaction::output_total() const {
  Amount t;
  for (const auto& e : outputs) t += e.amount;
  return t;
}

Bytes signing_bytes(const Transaction& tx) {
  ByteWriter w;
  write_tx_body(w, tx);
  return w.take();
}

Bytes canonical_bytes(const Transaction& tx) {
  ByteWriter w;
  write_tx_body(w, tx);
  w.u32(static_cast<std::uint32_t>(tx.signatures.size()));
  for (const auto& s : tx.signatures) w.blob(s);
  return w.take();
}

Transaction decode_transaction(crypto::ByteView bytes) {
  ByteReader r(bytes);
  if (r.u8() != kVersion) throw crypto::DecodeError("unsupported transaction version");
  Transaction tx;
  tx.nonce = crypto::to_array<16>(r.raw(16));
  tx.inputs = get_entries(r);
  tx.outputs = get_entries(r);
  tx.fee = Amount(r.u128());
  std::uint8_t kind = r.u8();
  if (kind > static_cast<std::uint8_t>(TxKind::key_destruction)) throw crypto::DecodeError("unknown kind");
  tx.kind = static_cast<TxKind>(kind);
  tx.activation_height = r.u64();
  std::uint8_t has_original = r.u8();
  if (has_original > 1) throw crypto::DecodeError("bad flag");
  if (has_original) tx.original = get_digest(r);
  std::uint32_t n = r.u32();
  if (n > r.remaining() / 4) throw crypto::DecodeError("signature count exceeds input");
  for (std::uint32_t i = 0; i < n; ++i) tx.signatures.push_back(r.blob());
  expect_end(r);
  return tx;
}

Bytes signing_bytes(const Block& b) {
  ByteWriter w;
  write_block_body(w, b);
  return w.take();
}

Bytes canonical_bytes(const Block& b) {
  ByteWriter w;
  write_block_body(w, b);
  w.blob(b.miner_sig);
  return w.take();
}

Block decode_block(crypto::ByteView bytes) {
  ByteReader r(bytes);
  if (r.u8() != kVersion) throw crypto::DecodeError("unsupported block version");
  Block b;
  b.k = r.u64();
  std::uint8_t has_prev = r.u8();
  if (has_prev > 1) throw crypto::DecodeError("bad flag");
  if (has_prev) b.prev = get_digest(r);
  std::uint32_t n = r.u32();
  if (n > r.remaining() / 4) throw crypto::DecodeError("transaction count exceeds input");
  for (std::uint32_t i = 0; i < n; ++i) b.txs.push_back(decode_transaction(r.blob()));
  MiningStep& s = b.step;
  s.miner.bytes = crypto::to_array<32>(r.raw(32));
  s.covered = r.u64();
  s.difficulty = r.u64();
  s.fees = Amount(r.u128());
  s.reward = Amount(r.u128());
  s.puzzle.seed = get_digest(r);
  s.puzzle.difficulty = s.difficulty;
  s.puzzle.target = crypto::be_to_int(r.blob());
  s.solution.s = r.u64();
  b.miner_sig = r.blob();
  expect_end(r);
  return b;
}

TxId tx_id(const Transaction& tx) { return crypto::digest(signing_bytes(tx)); }

Digest block_digest(const Block& b, crypto::DigestLength len) { return crypto::digest(canonical_bytes(b), len); }

Digest puzzle_seed(const Block& b, crypto::DigestLength len) {
  ByteWriter w;
  w.u8(b.prev ? 1 : 0);
  if (b.prev) put_digest(w, *b.prev);
  w.u64(b.k);
  w.u32(static_cast<std::uint32_t>(b.txs.size()));
  for (const auto& tx : b.txs) w.raw(tx_id(tx).bytes);
  w.raw(b.step.miner.bytes);
  w.u64(b.step.covered);
  w.u64(b.step.difficulty);
  w.u128(b.step.fees.quanta());
  w.u128(b.step.reward.quanta());
  return crypto::digest(w.bytes(), len);
}

void sign_transaction(Transaction& tx, const std::vector<crypto::SecretKey>& secrets,
                      crypto::SignatureScheme scheme) {
  if (secrets.size() != tx.inputs.size()) throw std::invalid_argument("one secret per input required");
  const crypto::Signer& signer = crypto::signer_for(scheme);
  Bytes msg = signing_bytes(tx);
  tx.signatures.clear();
  for (const auto& s : secrets) tx.signatures.push_back(signer.sign(s, msg));
}

}  // namespace nakamoto::ledger
