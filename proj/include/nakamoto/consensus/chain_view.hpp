#pragma once

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "nakamoto/ledger/validate.hpp"

namespace nakamoto::consensus {

using ledger::Block;
using ledger::Digest;
using numerics::BigInt;

/// One validated block in a block tree, with the ledger after it. Nodes are
/// immutable and shared between every view that contains them.
class ChainNode {
 public:
  using Ptr = std::shared_ptr<const ChainNode>;

  /// Validates `block` on top of `parent` (nullptr for genesis).
  static std::variant<Ptr, ledger::BlockRejection> extend(const Ptr& parent, const Block& block,
                                                          const ledger::MoneyProfile& profile);

  const Block& block() const { return block_; }
  const Digest& digest() const { return digest_; }
  const Ptr& parent() const { return parent_; }
  std::uint64_t height() const { return block_.k; }
  const BigInt& total_difficulty() const { return total_difficulty_; }
  const ledger::LedgerState& state() const { return state_; }

 private:
  ChainNode() = default;

  Block block_;
  Digest digest_;
  Ptr parent_;
  BigInt total_difficulty_;
  ledger::LedgerState state_;
};

/// A participant's current chain: the path from genesis to `tip`.
class ChainView {
 public:
  ChainView() = default;
  explicit ChainView(ChainNode::Ptr tip) : tip_(std::move(tip)) {}

  bool empty() const { return !tip_; }
  const ChainNode::Ptr& tip() const { return tip_; }
  /// Number of blocks.
  std::uint64_t length() const { return tip_ ? tip_->height() + 1 : 0; }
  BigInt total_difficulty() const { return tip_ ? tip_->total_difficulty() : BigInt(0); }
  std::optional<Digest> tip_digest() const;
  /// Ledger after the tip; empty ledger for an empty view.
  const ledger::LedgerState& state() const;

  /// Node at height k, or nullptr.
  ChainNode::Ptr at(std::uint64_t k) const;
  std::vector<Block> blocks() const;

  friend bool operator==(const ChainView& a, const ChainView& b) { return a.tip_ == b.tip_; }

 private:
  ChainNode::Ptr tip_;
};

/// Deepest node shared by both paths, or nullptr when they share no genesis.
ChainNode::Ptr common_ancestor(const ChainNode::Ptr& a, const ChainNode::Ptr& b);

/// Blocks at or after the one containing the transaction; 0 when absent.
std::uint64_t confirmations(const ChainView& chain, const ledger::TxId& id);

}  // namespace nakamoto::consensus
