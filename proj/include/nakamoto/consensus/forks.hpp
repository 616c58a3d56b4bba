#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nakamoto/consensus/chain_view.hpp"

namespace nakamoto::consensus {

struct ForkTip {
  Digest digest;
  std::uint64_t height = 0;
  BigInt total_difficulty;
  std::vector<std::string> participants;
};

/// Distinct tips among participants. Empty iff every view has the same tip.
struct ForkReport {
  std::vector<ForkTip> tips;  // ordered by digest
  std::optional<std::uint64_t> common_ancestor_height;

  bool empty() const { return tips.empty(); }
  /// One JSON object; `time` is the scenario timestamp in canonical Rat text.
  std::string json(const std::string& time) const;
};

ForkReport detect_forks(const std::map<std::string, ChainView>& views);

}  // namespace nakamoto::consensus
