#pragma once

#include <optional>
#include <string>
#include <variant>

#include "nakamoto/ledger/profile.hpp"
#include "nakamoto/ledger/state.hpp"
#include "nakamoto/ledger/types.hpp"

namespace nakamoto::ledger {

enum class TxRejection {
  bad_signature,
  replayed_nonce,
  insufficient_funds,
  destroyed_address,
  blocked_address,
  malformed,
  fee_too_low,
  restitution_of_restitution,
  restitution_exceeds_received,
  unknown_original,
  feature_disabled,
  pending_incoming,
};

std::string to_string(TxRejection r);

/// Checks `tx` for inclusion in the block at height state.height().
/// Conditional-future transactions only need the first input to cover the
/// fee; the transfer itself waits until the inputs cover it.
std::optional<TxRejection> validate_transaction(const LedgerState& state, const Transaction& tx,
                                                const MoneyProfile& profile);

/// The chain conditions a block can break:
///   a  genesis and linkage (k, prev digest)
///   b  signatures (transactions and miner)
///   c  n equals the number of transactions
///   d  g equals the sum of fees, h equals the yield
///   e  transactions only extract coin from sufficiently large coins
/// plus the rules that are not lettered.
enum class ChainRule { a_genesis, b_signatures, c_count, d_fees, e_funds, proof_of_work, transaction };

std::string to_string(ChainRule r);
/// "a".."e", or "" for rules without a letter.
std::string condition_letter(ChainRule r);

struct BlockRejection {
  ChainRule rule;
  std::string detail;
  std::optional<std::size_t> tx_index;
  std::optional<TxRejection> tx_reason;
};

/// Applies the block at height state.height(). Returns the successor state,
/// or the first violated rule with the input state left untouched.
std::variant<LedgerState, BlockRejection> apply_block(const LedgerState& state, const Block& block,
                                                      const MoneyProfile& profile);

/// Governor adjustment of a managed supply: credits or burns `amount` at
/// `treasury`. Throws ProfileForbids on exim or halving profiles and
/// NegativeSupply when a decrease exceeds the treasury balance.
class ProfileForbids : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};
class NegativeSupply : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};
LedgerState adjust_supply(const LedgerState& state, const MoneyProfile& profile, const Address& treasury,
                          const Amount& amount, bool increase);

}  // namespace nakamoto::ledger

namespace nakamoto::ledger {

/// g for a block carrying `txs` on top of `state`: the fees of every
/// transaction not voided by a double-spend penalty.
Amount collectable_fees(const LedgerState& state, const std::vector<Transaction>& txs, const MoneyProfile& profile);

}  // namespace nakamoto::ledger
