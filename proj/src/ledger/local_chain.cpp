#include "nakamoto/ledger/local_chain.hpp"

#include <stdexcept>

namespace nakamoto::ledger {

Nonce random_nonce(crypto::Rng& rng) {
  Bytes b = rng.bytes(16);
  return crypto::to_array<16>(b);
}

Transaction make_transaction(const crypto::KeyPair& from, std::vector<Entry> outputs, Amount fee, Nonce nonce,
                             crypto::SignatureScheme scheme, TxKind kind) {
  Transaction tx;
  tx.nonce = nonce;
  tx.kind = kind;
  tx.outputs = std::move(outputs);
  tx.fee = fee;
  tx.inputs.push_back({from.address, tx.output_total() + fee});
  sign_transaction(tx, {from.secret}, scheme);
  return tx;
}

Block assemble_block(const LedgerState& state, const MoneyProfile& profile, const crypto::KeyPair& miner,
                     std::vector<Transaction> txs, std::uint64_t difficulty, std::uint64_t solve_budget) {
  Block b;
  b.k = state.height();
  b.prev = state.tip();
  b.step.miner = miner.address;
  b.step.covered = txs.size();
  b.step.difficulty = std::max(difficulty, profile.min_difficulty);
  b.step.fees = collectable_fees(state, txs, profile);
  b.step.reward = yield(profile, b.k);
  b.txs = std::move(txs);
  b.step.puzzle = crypto::make_puzzle(puzzle_seed(b, profile.digest_length), b.step.difficulty, b.step.covered,
                                      profile.alpha);
  if (profile.check_pow) {
    crypto::SolveResult r = crypto::solve(b.step.puzzle, solve_budget);
    if (!r.solution) throw std::runtime_error("solve budget exhausted");
    b.step.solution = *r.solution;
  }
  b.miner_sig = crypto::signer_for(profile.scheme).sign(miner.secret, signing_bytes(b));
  return b;
}

LocalChain::LocalChain(MoneyProfile profile) : profile_(std::move(profile)), states_{LedgerState{}} {}

std::optional<BlockRejection> LocalChain::append(const Block& b) {
  auto r = apply_block(states_.back(), b, profile_);
  if (auto* rej = std::get_if<BlockRejection>(&r)) return *rej;
  blocks_.push_back(b);
  states_.push_back(std::move(std::get<LedgerState>(r)));
  return std::nullopt;
}

const Block& LocalChain::mine(const crypto::KeyPair& miner, std::vector<Transaction> txs, std::uint64_t difficulty) {
  Block b = assemble_block(state(), profile_, miner, std::move(txs), difficulty);
  if (auto rej = append(b)) throw std::runtime_error("block rejected: " + to_string(rej->rule) + ": " + rej->detail);
  return blocks_.back();
}

void LocalChain::adjust_supply(const Address& treasury, const Amount& amount, bool increase) {
  states_.back() = ledger::adjust_supply(states_.back(), profile_, treasury, amount, increase);
}

ChainCheck validate_chain(const std::vector<Block>& blocks, const MoneyProfile& profile) {
  ChainCheck c;
  if (blocks.empty() || blocks.front().k != 0 || blocks.front().prev) {
    c.missing_genesis = true;
    return c;
  }
  LedgerState s;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    auto r = apply_block(s, blocks[i], profile);
    if (auto* rej = std::get_if<BlockRejection>(&r)) {
      c.failed_at = i;
      c.rejection = *rej;
      return c;
    }
    s = std::move(std::get<LedgerState>(r));
    c.total_difficulty += blocks[i].step.difficulty;
    ++c.blocks;
  }
  return c;
}

}  // namespace nakamoto::ledger
