#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nakamoto/crypto/rng.hpp"
#include "nakamoto/crypto/signer.hpp"
#include "nakamoto/ledger/validate.hpp"

namespace nakamoto::ledger {

Nonce random_nonce(crypto::Rng& rng);

/// Signed single-input transaction from `from` to the given outputs.
Transaction make_transaction(const crypto::KeyPair& from, std::vector<Entry> outputs, Amount fee, Nonce nonce,
                             crypto::SignatureScheme scheme, TxKind kind = TxKind::ordinary);

/// Builds, solves and signs the next block on top of `state`. Without
/// proof-of-work checking the solution is left at s = 0. Throws
/// std::runtime_error when the solve budget runs out.
Block assemble_block(const LedgerState& state, const MoneyProfile& profile, const crypto::KeyPair& miner,
                     std::vector<Transaction> txs, std::uint64_t difficulty,
                     std::uint64_t solve_budget = std::uint64_t(1) << 32);

/// Single-writer chain replica: blocks plus the state after each of them.
class LocalChain {
 public:
  explicit LocalChain(MoneyProfile profile);

  const MoneyProfile& profile() const { return profile_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  /// State after all blocks.
  const LedgerState& state() const { return states_.back(); }
  /// State after the first n blocks; n = 0 is the empty ledger.
  const LedgerState& state_at(std::size_t n) const { return states_.at(n); }

  std::optional<BlockRejection> append(const Block& b);
  /// assemble_block + append; throws std::runtime_error on rejection.
  const Block& mine(const crypto::KeyPair& miner, std::vector<Transaction> txs, std::uint64_t difficulty = 0);
  /// Governor adjustment applied to the current state (managed profiles
  /// only; see ledger::adjust_supply). It is not a block, so a replay of
  /// blocks() alone does not reproduce it.
  void adjust_supply(const Address& treasury, const Amount& amount, bool increase);

 private:
  MoneyProfile profile_;
  std::vector<Block> blocks_;
  std::vector<LedgerState> states_;
};

struct ChainCheck {
  std::size_t blocks = 0;
  numerics::BigInt total_difficulty;
  std::optional<std::size_t> failed_at;
  std::optional<BlockRejection> rejection;
  bool missing_genesis = false;

  bool ok() const { return !failed_at && !missing_genesis; }
};

/// Replays blocks from the empty ledger and reports the first violation.
ChainCheck validate_chain(const std::vector<Block>& blocks, const MoneyProfile& profile);

}  // namespace nakamoto::ledger
