#pragma once

#include <set>
#include <vector>

#include "nakamoto/consensus/choose.hpp"
#include "nakamoto/ledger/local_chain.hpp"

namespace nakamoto::netsim {

/// Holds the secret key and builds signed transactions and blocks. It has no
/// network interface; the simulation hands it data and takes results back.
class KeyConstructor {
 public:
  KeyConstructor(crypto::KeyPair key, crypto::SignatureScheme scheme) : key_(std::move(key)), scheme_(scheme) {}

  const ledger::Address& address() const { return key_.address; }
  ledger::Transaction transfer(std::vector<ledger::Entry> outputs, const ledger::Amount& fee,
                               const ledger::Nonce& nonce) const {
    return ledger::make_transaction(key_, std::move(outputs), fee, nonce, scheme_);
  }
  ledger::Block block(const ledger::LedgerState& state, const ledger::MoneyProfile& profile,
                      std::vector<ledger::Transaction> txs, std::uint64_t difficulty) const {
    return ledger::assemble_block(state, profile, key_, std::move(txs), difficulty);
  }

 private:
  crypto::KeyPair key_;
  crypto::SignatureScheme scheme_;
};

/// Network-facing intake: keeps the participant's chain view and applies the
/// chain-choice rule to every announced tip.
class InputRole {
 public:
  InputRole() = default;
  InputRole(consensus::ChainView view, consensus::ChoiceParams params) : view_(std::move(view)), params_(params) {}

  const consensus::ChainView& view() const { return view_; }
  const consensus::ChoiceParams& params() const { return params_; }
  consensus::Choice offer(const consensus::ChainNode::Ptr& tip) {
    consensus::ChainView candidate(tip);
    consensus::Choice c = consensus::choose(view_, candidate, params_);
    if (c.kind == consensus::Choice::Kind::extend || c.kind == consensus::Choice::Kind::replace) view_ = candidate;
    return c;
  }
  void adopt(consensus::ChainView v) { view_ = std::move(v); }

 private:
  consensus::ChainView view_;
  consensus::ChoiceParams params_;
};

/// Network-facing output: the transactions this participant has heard of or
/// issued, in arrival order, waiting for a block.
class PlacementRole {
 public:
  bool place(const ledger::Transaction& tx) {
    if (!seen_.insert(ledger::tx_id(tx)).second) return false;
    pool_.push_back(tx);
    return true;
  }
  const std::vector<ledger::Transaction>& pool() const { return pool_; }
  /// Transactions that can go into the next block on top of `state`; at most
  /// one per debited address so that a block never overdraws a coin.
  std::vector<ledger::Transaction> candidates(const ledger::LedgerState& state, const ledger::MoneyProfile& profile,
                                              std::size_t limit = 64) const;

 private:
  std::vector<ledger::Transaction> pool_;
  std::set<ledger::TxId> seen_;
};

}  // namespace nakamoto::netsim
