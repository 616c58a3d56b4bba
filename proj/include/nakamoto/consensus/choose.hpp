#pragma once

#include <cstdint>
#include <string>

#include "nakamoto/consensus/chain_view.hpp"

namespace nakamoto::consensus {

struct ChoiceParams {
  numerics::Rat epsilon{0};        // candidate suffix must exceed (1 + epsilon) times the replaced one
  std::uint64_t checkpoint = 100;  // replacements may remove at most this many blocks; 0 disables
};

struct Choice {
  enum class Kind { keep, extend, replace, below_checkpoint, invalid };
  Kind kind = Kind::keep;
  std::uint64_t depth = 0;  // blocks removed by a replacement
  std::uint64_t added = 0;  // blocks added by extend or replace

  static std::string name(Kind k);
};

/// Heaviest-chain rule with first-received tie-break. `candidate` is another
/// tip of the same block tree (blocks already validated on insertion).
/// - candidate descends from current: extend
/// - candidate is current or one of its ancestors, or not heavier: keep
/// - otherwise replace the suffix after the fork point when the candidate
///   suffix difficulty exceeds (1 + epsilon) times the replaced suffix and
///   the removed part stays within the checkpoint depth
/// A candidate with no common genesis is invalid.
Choice choose(const ChainView& current, const ChainView& candidate, const ChoiceParams& params);

}  // namespace nakamoto::consensus
