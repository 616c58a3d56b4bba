#include "nakamoto/ledger/state.hpp"

namespace nakamoto::ledger {

Amount LedgerState::balance(const Address& a) const {
  auto it = balances_.find(a);
  return it == balances_.end() ? Amount{} : it->second;
}

Amount LedgerState::parked_total() const {
  Amount t;
  for (const auto& p : parked_) t += p.amount;
  return t;
}

bool LedgerState::has_incoming(const Address& a) const {
  for (const auto& p : parked_)
    if (p.to == a) return true;
  for (const auto& c : conditionals_)
    for (const auto& o : c.tx.outputs)
      if (o.address == a) return true;
  return false;
}

const TxRecord* LedgerState::record(const TxId& id) const {
  auto it = records_.find(id);
  return it == records_.end() ? nullptr : &it->second;
}

std::optional<std::uint64_t> LedgerState::last_touched(const Address& a) const {
  auto it = touched_.find(a);
  if (it == touched_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::uint64_t> LedgerState::tx_height(const TxId& id) const {
  const TxRecord* r = record(id);
  if (!r) return std::nullopt;
  return r->height;
}

void StateEditor::credit(const Address& a, const Amount& v) {
  if (v.is_zero()) return;
  s_.balances_[a] += v;
}

void StateEditor::debit(const Address& a, const Amount& v) {
  if (v.is_zero()) return;
  auto it = s_.balances_.find(a);
  if (it == s_.balances_.end()) throw AmountError("debit from empty address");
  it->second -= v;
  if (it->second.is_zero()) s_.balances_.erase(it);
}

Amount StateEditor::drain(const Address& a) {
  auto it = s_.balances_.find(a);
  if (it == s_.balances_.end()) return {};
  Amount v = it->second;
  s_.balances_.erase(it);
  return v;
}

bool conserves(const LedgerState& s) {
  Amount held = s.penalty_pool() + s.parked_total();
  for (const auto& [a, v] : s.balances()) held += v;
  return held + s.destroyed_total() == s.minted_total() + s.issued_total();
}

std::uint64_t coin_age(const LedgerState& s, const Address& a, std::uint64_t current_height) {
  auto t = s.last_touched(a);
  if (!t || *t > current_height) return 0;
  return current_height - *t;
}

}  // namespace nakamoto::ledger
