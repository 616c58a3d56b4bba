#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "nakamoto/ledger/profile.hpp"
#include "nakamoto/ledger/types.hpp"

namespace nakamoto::ledger {

/// Output of a future transaction waiting for its activation height.
struct ParkedOutput {
  std::uint64_t activation = 0;
  Address to;
  Amount amount;
  TxId tx;
  friend bool operator==(const ParkedOutput&, const ParkedOutput&) = default;
};

/// Admitted conditional-future transaction; its fee is already paid.
struct PendingConditional {
  TxId id;
  Transaction tx;
  std::uint64_t admitted_at = 0;
  friend bool operator==(const PendingConditional&, const PendingConditional&) = default;
};

/// What the chain remembers about an applied transaction, for restitution.
struct TxRecord {
  TxKind kind = TxKind::ordinary;
  Address sender;                         // first input
  std::map<Address, Amount> received;     // per output address
  std::map<Address, Amount> restituted;   // returned so far
  std::uint64_t height = 0;
  friend bool operator==(const TxRecord&, const TxRecord&) = default;
};

/// Ledger after a sequence of blocks. A plain value: apply_block returns a
/// new one and leaves its argument untouched.
class LedgerState {
 public:
  /// Number of blocks applied; also the k expected next.
  std::uint64_t height() const { return height_; }
  const std::optional<Digest>& tip() const { return tip_; }

  Amount balance(const Address& a) const;
  const std::map<Address, Amount>& balances() const { return balances_; }
  bool nonce_seen(const Nonce& n) const { return nonces_.count(n) != 0; }
  bool destroyed(const Address& a) const { return destroyed_.count(a) != 0; }
  bool blocked(const Address& a) const { return blocked_.count(a) != 0; }
  const std::set<Address>& destroyed_addresses() const { return destroyed_; }
  const std::set<Address>& blocked_addresses() const { return blocked_; }
  Amount penalty_pool() const { return penalty_pool_; }
  const std::vector<ParkedOutput>& parked() const { return parked_; }
  const std::vector<PendingConditional>& pending_conditionals() const { return conditionals_; }
  Amount parked_total() const;
  bool has_incoming(const Address& a) const;
  Amount minted_total() const { return minted_; }
  Amount destroyed_total() const { return burned_; }
  Amount issued_total() const { return issued_; }
  const TxRecord* record(const TxId& id) const;
  std::optional<std::uint64_t> last_touched(const Address& a) const;
  /// Height at which the transaction was applied, if it was.
  std::optional<std::uint64_t> tx_height(const TxId& id) const;

  friend bool operator==(const LedgerState&, const LedgerState&) = default;

 private:
  friend class StateEditor;

  std::uint64_t height_ = 0;
  std::optional<Digest> tip_;
  std::map<Address, Amount> balances_;
  std::set<Nonce> nonces_;
  std::set<Address> destroyed_;
  std::set<Address> blocked_;
  Amount penalty_pool_;
  std::vector<ParkedOutput> parked_;
  std::vector<PendingConditional> conditionals_;
  Amount minted_;
  Amount burned_;
  Amount issued_;  // net managed issuance (tim only)
  std::map<TxId, TxRecord> records_;
  std::map<Address, std::uint64_t> touched_;
};

/// Mutable access used by the transition functions of this library.
class StateEditor {
 public:
  explicit StateEditor(LedgerState& s) : s_(s) {}

  void credit(const Address& a, const Amount& v);
  void debit(const Address& a, const Amount& v);
  /// Removes the whole balance and returns it.
  Amount drain(const Address& a);
  void touch(const Address& a, std::uint64_t height) { s_.touched_[a] = height; }
  void add_nonce(const Nonce& n) { s_.nonces_.insert(n); }
  void destroy(const Address& a) { s_.destroyed_.insert(a); }
  void block(const Address& a) { s_.blocked_.insert(a); }
  Amount& penalty_pool() { return s_.penalty_pool_; }
  std::vector<ParkedOutput>& parked() { return s_.parked_; }
  std::vector<PendingConditional>& conditionals() { return s_.conditionals_; }
  Amount& minted() { return s_.minted_; }
  Amount& burned() { return s_.burned_; }
  Amount& issued() { return s_.issued_; }
  std::map<TxId, TxRecord>& records() { return s_.records_; }
  void advance(const Digest& tip) {
    s_.tip_ = tip;
    ++s_.height_;
  }

 private:
  LedgerState& s_;
};

/// Sum of balances, penalty pool and parked outputs must equal
/// minted + issued - destroyed.
bool conserves(const LedgerState& s);

/// Blocks since the address was last touched by a transaction or mining
/// step; 0 for an address never seen.
std::uint64_t coin_age(const LedgerState& s, const Address& a, std::uint64_t current_height);

}  // namespace nakamoto::ledger
