#include <algorithm>
#include <set>

#include "detail.hpp"
#include "nakamoto/ledger/validate.hpp"

namespace nakamoto::ledger {

std::string to_string(ChainRule r) {
  switch (r) {
    case ChainRule::a_genesis: return "genesis-or-linkage";
    case ChainRule::b_signatures: return "signatures";
    case ChainRule::c_count: return "covered-count";
    case ChainRule::d_fees: return "fees-and-reward";
    case ChainRule::e_funds: return "sufficient-funds";
    case ChainRule::proof_of_work: return "proof-of-work";
    case ChainRule::transaction: return "transaction-rule";
  }
  return "unknown";
}

std::string condition_letter(ChainRule r) {
  switch (r) {
    case ChainRule::a_genesis: return "a";
    case ChainRule::b_signatures: return "b";
    case ChainRule::c_count: return "c";
    case ChainRule::d_fees: return "d";
    case ChainRule::e_funds: return "e";
    default: return "";
  }
}

namespace {

BlockRejection reject(ChainRule rule, std::string detail, std::optional<std::size_t> index = std::nullopt,
                      std::optional<TxRejection> reason = std::nullopt) {
  return BlockRejection{rule, std::move(detail), index, reason};
}

ChainRule rule_for(TxRejection r) {
  switch (r) {
    case TxRejection::bad_signature: return ChainRule::b_signatures;
    case TxRejection::insufficient_funds:
    case TxRejection::destroyed_address:
    case TxRejection::blocked_address:
    case TxRejection::restitution_exceeds_received:
      return ChainRule::e_funds;
    default: return ChainRule::transaction;
  }
}

// Addresses debited by two or more transactions of the block where every
// debit alone fits the pre-block coin but together they exceed it.
std::set<Address> conflicting_addresses(const LedgerState& state, const std::vector<Transaction>& txs) {
  std::map<Address, std::vector<Amount>> debits;
  for (const auto& tx : txs) {
    if (!detail::well_formed(tx)) continue;
    for (const auto& [a, v] : detail::admission_debits(tx)) debits[a].push_back(v);
  }
  std::set<Address> out;
  for (const auto& [a, list] : debits) {
    if (list.size() < 2) continue;
    Amount coin = state.balance(a), sum;
    bool each_fits = std::all_of(list.begin(), list.end(), [&](const Amount& v) { return v <= coin; });
    for (const auto& v : list) sum += v;
    if (each_fits && sum > coin) out.insert(a);
  }
  return out;
}

void record(StateEditor& ed, const Transaction& tx, const TxId& id, std::uint64_t height) {
  TxRecord r;
  r.kind = tx.kind;
  r.sender = tx.inputs.front().address;
  for (const auto& o : tx.outputs) r.received[o.address] += o.amount;
  r.height = height;
  ed.records()[id] = std::move(r);
}

void admit(StateEditor& ed, const Transaction& tx, std::uint64_t height) {
  TxId id = tx_id(tx);
  ed.add_nonce(tx.nonce);
  for (const auto& [a, v] : detail::admission_debits(tx)) {
    ed.debit(a, v);
    ed.touch(a, height);
  }
  switch (tx.kind) {
    case TxKind::ordinary:
      for (const auto& o : tx.outputs) {
        ed.credit(o.address, o.amount);
        ed.touch(o.address, height);
      }
      record(ed, tx, id, height);
      break;
    case TxKind::restitution: {
      const Entry& in = tx.inputs.front();
      ed.records()[*tx.original].restituted[in.address] += in.amount;
      ed.credit(tx.outputs.front().address, tx.outputs.front().amount);
      ed.touch(tx.outputs.front().address, height);
      record(ed, tx, id, height);
      break;
    }
    case TxKind::future:
      for (const auto& o : tx.outputs) ed.parked().push_back({tx.activation_height, o.address, o.amount, id});
      record(ed, tx, id, height);
      break;
    case TxKind::conditional_future:
      ed.conditionals().push_back({id, tx, height});
      break;
    case TxKind::key_destruction: {
      const Address& a = tx.inputs.front().address;
      ed.burned() += ed.drain(a);
      ed.destroy(a);
      record(ed, tx, id, height);
      break;
    }
  }
}

// Debits still owed by a conditional transaction whose fee was paid.
std::map<Address, Amount> remaining_debits(const Transaction& tx) {
  std::map<Address, Amount> d;
  for (std::size_t i = 0; i < tx.inputs.size(); ++i)
    d[tx.inputs[i].address] = i == 0 ? tx.inputs[i].amount - tx.fee : tx.inputs[i].amount;
  return d;
}

void settle(const LedgerState& view, StateEditor& ed, std::uint64_t height) {
  auto& parked = ed.parked();
  std::vector<ParkedOutput> keep;
  for (const auto& p : parked) {
    if (p.activation <= height) {
      ed.credit(p.to, p.amount);
      ed.touch(p.to, height);
    } else {
      keep.push_back(p);
    }
  }
  parked = std::move(keep);

  auto& conds = ed.conditionals();
  std::vector<PendingConditional> waiting;
  for (auto& c : conds) {
    bool ready = true;
    auto owed = remaining_debits(c.tx);
    for (const auto& [a, v] : owed)
      if (view.destroyed(a) || view.blocked(a) || view.balance(a) < v) ready = false;
    for (const auto& o : c.tx.outputs)
      if (view.destroyed(o.address)) ready = false;
    if (!ready) {
      waiting.push_back(std::move(c));
      continue;
    }
    for (const auto& [a, v] : owed) {
      ed.debit(a, v);
      ed.touch(a, height);
    }
    for (const auto& o : c.tx.outputs) {
      ed.credit(o.address, o.amount);
      ed.touch(o.address, height);
    }
    record(ed, c.tx, c.id, height);
  }
  conds = std::move(waiting);
}

}  // namespace

std::variant<LedgerState, BlockRejection> apply_block(const LedgerState& state, const Block& block,
                                                      const MoneyProfile& profile) {
  const MiningStep& step = block.step;
  // (a) position in the chain
  if (block.k != state.height())
    return reject(ChainRule::a_genesis, "expected k=" + std::to_string(state.height()) + ", got " +
                                            std::to_string(block.k));
  if (block.k == 0 && block.prev) return reject(ChainRule::a_genesis, "genesis block has a predecessor");
  if (block.k > 0 && (!block.prev || block.prev != state.tip()))
    return reject(ChainRule::a_genesis, "prev digest does not match the chain tip");

  // (c) covered count
  if (step.covered != block.txs.size())
    return reject(ChainRule::c_count, "n=" + std::to_string(step.covered) + " but block has " +
                                          std::to_string(block.txs.size()) + " transactions");

  std::set<Address> conflicted;
  if (profile.features.penalties) conflicted = conflicting_addresses(state, block.txs);
  auto voided = [&](const Transaction& tx) {
    if (conflicted.empty() || !detail::well_formed(tx)) return false;
    for (const auto& [a, v] : detail::admission_debits(tx))
      if (conflicted.count(a)) return true;
    return false;
  };

  // (d) fees and reward
  Amount fees;
  try {
    for (const auto& tx : block.txs)
      if (!voided(tx)) fees += tx.fee;
  } catch (const AmountError&) {
    return reject(ChainRule::d_fees, "fee sum overflows");
  }
  if (step.fees != fees) return reject(ChainRule::d_fees, "g=" + step.fees.str() + " but fees sum to " + fees.str());
  Amount h = yield(profile, block.k);
  if (step.reward != h) return reject(ChainRule::d_fees, "h=" + step.reward.str() + " but yield is " + h.str());

  // (b) signatures
  for (std::size_t i = 0; i < block.txs.size(); ++i)
    if (!detail::signatures_valid(block.txs[i], profile))
      return reject(ChainRule::b_signatures, "transaction signature invalid", i, TxRejection::bad_signature);
  {
    bool ok = false;
    try {
      ok = crypto::signer_for(profile.scheme).verify(step.miner, signing_bytes(block), block.miner_sig);
    } catch (const crypto::CryptoError&) {
      ok = false;
    }
    if (!ok) return reject(ChainRule::b_signatures, "miner signature invalid");
  }

  // proof of work
  if (step.difficulty < profile.min_difficulty) return reject(ChainRule::proof_of_work, "difficulty below minimum");
  if (step.puzzle.difficulty != step.difficulty) return reject(ChainRule::proof_of_work, "puzzle difficulty differs from m");
  if (step.puzzle.seed != puzzle_seed(block, profile.digest_length))
    return reject(ChainRule::proof_of_work, "puzzle seed does not match block contents");
  if (step.puzzle.target != crypto::puzzle_target(step.difficulty, step.covered, profile.alpha, profile.digest_length))
    return reject(ChainRule::proof_of_work, "puzzle target does not match difficulty");
  if (profile.check_pow && !crypto::check(step.puzzle, step.solution))
    return reject(ChainRule::proof_of_work, "solution does not solve the puzzle");

  LedgerState next = state;
  StateEditor ed(next);
  Amount payout = next.penalty_pool();
  ed.penalty_pool() = Amount{};
  for (const auto& a : conflicted) {
    ed.penalty_pool() += ed.drain(a);
    ed.block(a);
    ed.touch(a, block.k);
  }

  // (e) and the remaining transaction rules, in block order
  for (std::size_t i = 0; i < block.txs.size(); ++i) {
    const Transaction& tx = block.txs[i];
    if (voided(tx)) {
      if (next.nonce_seen(tx.nonce))
        return reject(ChainRule::transaction, "voided transaction replays a nonce", i, TxRejection::replayed_nonce);
      ed.add_nonce(tx.nonce);
      continue;
    }
    if (auto why = detail::check_rules(next, tx, profile, false))
      return reject(rule_for(*why), to_string(*why), i, *why);
    admit(ed, tx, block.k);
  }

  ed.credit(step.miner, fees + h + payout);
  ed.touch(step.miner, block.k);
  ed.minted() += h;
  settle(next, ed, block.k);
  ed.advance(block_digest(block, profile.digest_length));
  return next;
}

Amount collectable_fees(const LedgerState& state, const std::vector<Transaction>& txs, const MoneyProfile& profile) {
  std::set<Address> conflicted;
  if (profile.features.penalties) conflicted = conflicting_addresses(state, txs);
  Amount fees;
  for (const auto& tx : txs) {
    bool void_tx = false;
    if (!conflicted.empty() && detail::well_formed(tx))
      for (const auto& [a, v] : detail::admission_debits(tx)) void_tx = void_tx || conflicted.count(a) != 0;
    if (!void_tx) fees += tx.fee;
  }
  return fees;
}

LedgerState adjust_supply(const LedgerState& state, const MoneyProfile& profile, const Address& treasury,
                          const Amount& amount, bool increase) {
  if (profile.policy == Policy::exim || profile.schedule != Schedule::managed)
    throw ProfileForbids("profile '" + profile.name + "' does not allow supply management");
  LedgerState next = state;
  StateEditor ed(next);
  if (increase) {
    ed.credit(treasury, amount);
    ed.issued() += amount;
  } else {
    if (state.balance(treasury) < amount)
      throw NegativeSupply("decrease of " + amount.str() + " exceeds treasury holding " + state.balance(treasury).str());
    ed.debit(treasury, amount);
    ed.burned() += amount;
  }
  return next;
}

}  // namespace nakamoto::ledger
