#include "nakamoto/consensus/chain_view.hpp"

#include <algorithm>

namespace nakamoto::consensus {

std::variant<ChainNode::Ptr, ledger::BlockRejection> ChainNode::extend(const Ptr& parent, const Block& block,
                                                                       const ledger::MoneyProfile& profile) {
  static const ledger::LedgerState empty;
  auto r = ledger::apply_block(parent ? parent->state_ : empty, block, profile);
  if (auto* rej = std::get_if<ledger::BlockRejection>(&r)) return *rej;
  std::shared_ptr<ChainNode> n(new ChainNode());
  n->block_ = block;
  n->state_ = std::move(std::get<ledger::LedgerState>(r));
  n->digest_ = *n->state_.tip();
  n->parent_ = parent;
  n->total_difficulty_ = (parent ? parent->total_difficulty_ : BigInt(0)) + block.step.difficulty;
  return Ptr(std::move(n));
}

std::optional<Digest> ChainView::tip_digest() const {
  if (!tip_) return std::nullopt;
  return tip_->digest();
}

const ledger::LedgerState& ChainView::state() const {
  static const ledger::LedgerState empty;
  return tip_ ? tip_->state() : empty;
}

ChainNode::Ptr ChainView::at(std::uint64_t k) const {
  ChainNode::Ptr n = tip_;
  if (!n || k > n->height()) return nullptr;
  while (n && n->height() > k) n = n->parent();
  return n;
}

std::vector<Block> ChainView::blocks() const {
  std::vector<Block> out;
  for (ChainNode::Ptr n = tip_; n; n = n->parent()) out.push_back(n->block());
  std::reverse(out.begin(), out.end());
  return out;
}

ChainNode::Ptr common_ancestor(const ChainNode::Ptr& a, const ChainNode::Ptr& b) {
  ChainNode::Ptr x = a, y = b;
  while (x && y && x != y) {
    if (x->height() > y->height()) x = x->parent();
    else if (y->height() > x->height()) y = y->parent();
    else {
      x = x->parent();
      y = y->parent();
    }
  }
  return x && y ? x : nullptr;
}

std::uint64_t confirmations(const ChainView& chain, const ledger::TxId& id) {
  if (chain.empty()) return 0;
  // Applied transactions are indexed by the ledger; conditional ones are
  // recorded when they settle, not where they were included, so walk for those.
  if (const ledger::TxRecord* r = chain.state().record(id); r && r->kind != ledger::TxKind::conditional_future)
    return chain.tip()->height() - r->height + 1;
  for (ChainNode::Ptr n = chain.tip(); n; n = n->parent())
    for (const auto& tx : n->block().txs)
      if (ledger::tx_id(tx) == id) return chain.tip()->height() - n->height() + 1;
  return 0;
}

}  // namespace nakamoto::consensus
