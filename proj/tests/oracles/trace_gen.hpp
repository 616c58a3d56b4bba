#pragma once

// Randomized block sequences exercising every transaction kind. Candidate
// transactions are drawn blindly and kept only if the block still applies,
// so traces also probe the rejection paths.

#include <vector>

#include "nakamoto/crypto/rng.hpp"
#include "nakamoto/ledger/local_chain.hpp"

namespace nakamoto::oracle {

inline ledger::MoneyProfile feature_profile() {
  ledger::MoneyProfile p = ledger::MoneyProfile::desk();
  p.name = "desk-features";
  p.scheme = crypto::SignatureScheme::null;
  p.check_pow = false;
  p.features = {true, true, true, true, true};
  return p;
}

struct Trace {
  ledger::LocalChain chain;
  std::vector<crypto::KeyPair> keys;
  std::size_t rejected_candidates = 0;
};

inline ledger::Amount random_part(crypto::Rng& rng, const ledger::Amount& of) {
  if (of.is_zero()) return {};
  auto hi = static_cast<std::uint64_t>(std::min<ledger::Quanta>(of.quanta(), ledger::Quanta(1) << 62));
  return ledger::Amount(rng.uniform_int(0, hi));
}

inline Trace random_trace(std::uint64_t seed, std::size_t blocks = 12, std::size_t n_keys = 6,
                          ledger::MoneyProfile profile = feature_profile()) {
  using namespace ledger;
  crypto::Rng rng(seed);
  Trace t{LocalChain(profile), {}, 0};
  for (std::size_t i = 0; i < n_keys; ++i) t.keys.push_back(crypto::gen_keypair(rng, profile.scheme));
  std::vector<TxId> history;

  auto pick = [&]() -> const crypto::KeyPair& { return t.keys[rng.uniform_int(0, t.keys.size() - 1)]; };

  for (std::size_t bi = 0; bi < blocks; ++bi) {
    const LedgerState& s = t.chain.state();
    const crypto::KeyPair& miner = pick();
    std::vector<Transaction> txs;
    std::size_t want = rng.uniform_int(0, 4);
    for (std::size_t c = 0; c < want * 2 && txs.size() < want; ++c) {
      const crypto::KeyPair& from = pick();
      Amount bal = s.balance(from.address);
      Amount fee = rng.bernoulli(0.1) ? Amount{} : Amount(rng.uniform_int(1, 1000));
      Amount amt = rng.bernoulli(0.1) ? bal : random_part(rng, bal);
      Transaction tx;
      tx.nonce = random_nonce(rng);
      if (rng.bernoulli(0.03) && !txs.empty()) tx.nonce = txs.back().nonce;  // replay attempt
      std::uint64_t kind = rng.uniform_int(0, 9);
      const Address& to = pick().address;
      if (kind <= 4) {
        tx.kind = TxKind::ordinary;
        tx.outputs = {{to, amt}};
        if (rng.bernoulli(0.3)) tx.outputs.push_back({pick().address, random_part(rng, amt)});
      } else if (kind == 5) {
        tx.kind = TxKind::future;
        tx.activation_height = s.height() + rng.uniform_int(0, 4);
        tx.outputs = {{to, amt}};
      } else if (kind == 6) {
        tx.kind = TxKind::conditional_future;
        tx.outputs = {{to, Amount(rng.uniform_int(1, std::uint64_t(60) * 100000000))}};
      } else if (kind == 7 && !history.empty()) {
        tx.kind = TxKind::restitution;
        TxId orig = history[rng.uniform_int(0, history.size() - 1)];
        const TxRecord* r = s.record(orig);
        if (!r || r->received.empty()) continue;
        auto it = r->received.begin();
        std::advance(it, static_cast<long>(rng.uniform_int(0, r->received.size() - 1)));
        tx.original = orig;
        tx.outputs = {{r->sender, random_part(rng, it->second)}};
        tx.fee = rng.bernoulli(0.5) ? Amount{} : Amount(1);
        tx.inputs = {{it->first, tx.outputs[0].amount + tx.fee}};
        const crypto::KeyPair* signer = nullptr;
        for (const auto& k : t.keys)
          if (k.address == it->first) signer = &k;
        if (!signer) continue;
        sign_transaction(tx, {signer->secret}, profile.scheme);
        txs.push_back(tx);
        if (auto rej = apply_block(s, assemble_block(s, profile, miner, txs, 1), profile);
            std::holds_alternative<BlockRejection>(rej)) {
          txs.pop_back();
          ++t.rejected_candidates;
        }
        continue;
      } else if (kind == 8 && rng.bernoulli(0.3)) {
        tx.kind = TxKind::key_destruction;
        fee = std::min(fee, bal);
      } else {
        // Attempted double spend: a second debit against the same coin.
        tx.kind = TxKind::ordinary;
        tx.outputs = {{to, amt}};
      }
      tx.fee = fee;
      Amount total = tx.output_total() + fee;
      if (tx.kind == TxKind::conditional_future) total = tx.output_total() + fee;
      tx.inputs = {{from.address, total}};
      if (rng.bernoulli(0.15)) {
        const crypto::KeyPair& second = pick();
        if (second.address != from.address) {
          Amount extra = random_part(rng, s.balance(second.address));
          tx.inputs.push_back({second.address, extra});
          tx.outputs.push_back({from.address, extra});
          sign_transaction(tx, {from.secret, second.secret}, profile.scheme);
        } else {
          sign_transaction(tx, {from.secret}, profile.scheme);
        }
      } else {
        sign_transaction(tx, {from.secret}, profile.scheme);
      }
      txs.push_back(tx);
      auto trial = apply_block(s, assemble_block(s, profile, miner, txs, 1), profile);
      if (std::holds_alternative<BlockRejection>(trial)) {
        txs.pop_back();
        ++t.rejected_candidates;
      }
    }
    for (const auto& tx : txs) history.push_back(tx_id(tx));
    t.chain.mine(miner, txs, 1 + rng.uniform_int(0, 3));
  }
  return t;
}

}  // namespace nakamoto::oracle
