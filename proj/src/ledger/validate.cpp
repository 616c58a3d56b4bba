#include "nakamoto/ledger/validate.hpp"

#include <set>

#include "detail.hpp"

namespace nakamoto::ledger {

std::string to_string(TxRejection r) {
  switch (r) {
    case TxRejection::bad_signature: return "bad-signature";
    case TxRejection::replayed_nonce: return "replayed-nonce";
    case TxRejection::insufficient_funds: return "insufficient-funds";
    case TxRejection::destroyed_address: return "destroyed-address";
    case TxRejection::blocked_address: return "blocked-address";
    case TxRejection::malformed: return "malformed";
    case TxRejection::fee_too_low: return "fee-too-low";
    case TxRejection::restitution_of_restitution: return "restitution-of-restitution";
    case TxRejection::restitution_exceeds_received: return "restitution-exceeds-received";
    case TxRejection::unknown_original: return "unknown-original";
    case TxRejection::feature_disabled: return "feature-disabled";
    case TxRejection::pending_incoming: return "pending-incoming";
  }
  return "unknown";
}

namespace detail {

bool feature_enabled(const Features& f, TxKind k) {
  switch (k) {
    case TxKind::ordinary: return true;
    case TxKind::future: return f.future;
    case TxKind::conditional_future: return f.conditional;
    case TxKind::restitution: return f.restitution;
    case TxKind::key_destruction: return f.destruction;
  }
  return false;
}

bool well_formed(const Transaction& tx) {
  if (tx.inputs.empty() || tx.signatures.size() != tx.inputs.size()) return false;
  std::set<Address> seen;
  for (const auto& in : tx.inputs)
    if (!seen.insert(in.address).second) return false;
  try {
    if (tx.input_total() != tx.output_total() + tx.fee) return false;
  } catch (const AmountError&) {
    return false;
  }
  if (tx.kind != TxKind::future && tx.activation_height != 0) return false;
  if ((tx.kind == TxKind::restitution) != tx.original.has_value()) return false;
  switch (tx.kind) {
    case TxKind::ordinary:
    case TxKind::future:
      return !tx.outputs.empty();
    case TxKind::conditional_future:
      return !tx.outputs.empty() && tx.inputs.front().amount >= tx.fee;
    case TxKind::restitution:
      return tx.inputs.size() == 1 && tx.outputs.size() == 1;
    case TxKind::key_destruction:
      return tx.inputs.size() == 1 && tx.outputs.empty() && tx.inputs.front().amount == tx.fee;
  }
  return false;
}

bool signatures_valid(const Transaction& tx, const MoneyProfile& profile) {
  if (tx.signatures.size() != tx.inputs.size()) return false;
  const crypto::Signer& signer = crypto::signer_for(profile.scheme);
  Bytes msg = signing_bytes(tx);
  for (std::size_t i = 0; i < tx.inputs.size(); ++i) {
    try {
      if (!signer.verify(tx.inputs[i].address, msg, tx.signatures[i])) return false;
    } catch (const crypto::CryptoError&) {
      return false;
    }
  }
  return true;
}

std::map<Address, Amount> admission_debits(const Transaction& tx) {
  std::map<Address, Amount> d;
  if (tx.kind == TxKind::conditional_future) {
    d[tx.inputs.front().address] = tx.fee;
  } else {
    for (const auto& in : tx.inputs) d[in.address] += in.amount;
  }
  return d;
}

std::optional<TxRejection> check_rules(const LedgerState& state, const Transaction& tx,
                                       const MoneyProfile& profile, bool check_signatures) {
  if (!feature_enabled(profile.features, tx.kind)) return TxRejection::feature_disabled;
  if (!well_formed(tx)) return TxRejection::malformed;
  if (check_signatures && !signatures_valid(tx, profile)) return TxRejection::bad_signature;
  if (state.nonce_seen(tx.nonce)) return TxRejection::replayed_nonce;
  if (tx.kind != TxKind::restitution && tx.fee < profile.min_fee) return TxRejection::fee_too_low;
  for (const auto& in : tx.inputs) {
    if (state.destroyed(in.address)) return TxRejection::destroyed_address;
    if (state.blocked(in.address)) return TxRejection::blocked_address;
  }
  for (const auto& out : tx.outputs)
    if (state.destroyed(out.address)) return TxRejection::destroyed_address;

  if (tx.kind == TxKind::restitution) {
    const TxRecord* orig = state.record(*tx.original);
    if (!orig) return TxRejection::unknown_original;
    if (orig->kind == TxKind::restitution) return TxRejection::restitution_of_restitution;
    const Entry& in = tx.inputs.front();
    if (tx.outputs.front().address != orig->sender) return TxRejection::malformed;
    auto got = orig->received.find(in.address);
    if (got == orig->received.end()) return TxRejection::malformed;
    Amount already;
    if (auto it = orig->restituted.find(in.address); it != orig->restituted.end()) already = it->second;
    if (already + in.amount > got->second) return TxRejection::restitution_exceeds_received;
  }
  if (tx.kind == TxKind::key_destruction && state.has_incoming(tx.inputs.front().address))
    return TxRejection::pending_incoming;

  for (const auto& [addr, amount] : admission_debits(tx))
    if (amount > state.balance(addr)) return TxRejection::insufficient_funds;
  return std::nullopt;
}

}  // namespace detail

std::optional<TxRejection> validate_transaction(const LedgerState& state, const Transaction& tx,
                                                const MoneyProfile& profile) {
  return detail::check_rules(state, tx, profile, true);
}

}  // namespace nakamoto::ledger
