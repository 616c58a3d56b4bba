#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nakamoto/crypto/digest.hpp"
#include "nakamoto/crypto/puzzle.hpp"
#include "nakamoto/crypto/signer.hpp"
#include "nakamoto/ledger/amount.hpp"

namespace nakamoto::ledger {

using crypto::Address;
using crypto::Bytes;
using crypto::Digest;
using crypto::Signature;

using Nonce = std::array<std::uint8_t, 16>;
using TxId = Digest;

enum class TxKind : std::uint8_t {
  ordinary = 0,
  future = 1,              // outputs credited once the chain reaches activation_height
  conditional_future = 2,  // fee now, transfer once every input covers its amount
  restitution = 3,         // returns coin received by `original` to its sender
  key_destruction = 4,     // pays the fee, burns the rest, retires the address
};

std::string to_string(TxKind k);

struct Entry {
  Address address;
  Amount amount;
  friend bool operator==(const Entry&, const Entry&) = default;
};

struct Transaction {
  Nonce nonce{};
  std::vector<Entry> inputs;
  std::vector<Entry> outputs;
  Amount fee;
  TxKind kind = TxKind::ordinary;
  std::uint64_t activation_height = 0;  // future only
  std::optional<TxId> original;         // restitution only
  std::vector<Signature> signatures;    // one per input, same order

  Amount input_total() const;
  Amount output_total() const;

  friend bool operator==(const Transaction&, const Transaction&) = default;
};

/// The tuple (d, n, m, g, h, P, s).
struct MiningStep {
  Address miner;             // d
  std::uint64_t covered = 0;  // n
  std::uint64_t difficulty = 1;  // m
  Amount fees;                // g
  Amount reward;              // h
  crypto::Puzzle puzzle;      // P
  crypto::Solution solution;  // s

  friend bool operator==(const MiningStep&, const MiningStep&) = default;
};

struct Block {
  std::uint64_t k = 0;
  std::optional<Digest> prev;
  std::vector<Transaction> txs;
  MiningStep step;
  Signature miner_sig;

  friend bool operator==(const Block&, const Block&) = default;
};

// Canonical layout (all integers big-endian):
//
//   transaction := u8 version=1, nonce[16], u32 #inputs, (address[32] u128)*,
//                  u32 #outputs, (address[32] u128)*, u128 fee, u8 kind,
//                  u64 activation_height, u8 has_original, [u8 len, original],
//                  u32 #signatures, (u32 len, sig)*
//   block       := u8 version=1, u64 k, u8 has_prev, [u8 len, prev],
//                  u32 #txs, (u32 len, transaction)*, address[32], u64 n,
//                  u64 m, u128 g, u128 h, u8 len, seed, u32 len, target,
//                  u64 s, u32 len, miner_sig
//
// The signing preimage of a transaction is its layout up to the signature
// list; the miner signs the block layout up to miner_sig.

Bytes signing_bytes(const Transaction& tx);
Bytes canonical_bytes(const Transaction& tx);
Transaction decode_transaction(crypto::ByteView bytes);

Bytes signing_bytes(const Block& b);
Bytes canonical_bytes(const Block& b);
Block decode_block(crypto::ByteView bytes);

/// SHA-256 of the signing preimage.
TxId tx_id(const Transaction& tx);
Digest block_digest(const Block& b, crypto::DigestLength len);

/// Puzzle seed: digest over (prev, k, tx ids, d, n, m, g, h).
Digest puzzle_seed(const Block& b, crypto::DigestLength len);

/// Fills signatures, one per input, with the given secrets in input order.
void sign_transaction(Transaction& tx, const std::vector<crypto::SecretKey>& secrets,
                      crypto::SignatureScheme scheme);

}  // namespace nakamoto::ledger
