#include "nakamoto/consensus/choose.hpp"

namespace nakamoto::consensus {

std::string Choice::name(Kind k) {
  switch (k) {
    case Kind::keep: return "keep";
    case Kind::extend: return "extend";
    case Kind::replace: return "replace";
    case Kind::below_checkpoint: return "below-checkpoint";
    case Kind::invalid: return "invalid-candidate";
  }
  return "unknown";
}

Choice choose(const ChainView& current, const ChainView& candidate, const ChoiceParams& params) {
  Choice c;
  if (candidate.empty()) return c;
  if (current.empty()) {
    if (candidate.at(0) == nullptr) c.kind = Choice::Kind::invalid;
    else {
      c.kind = Choice::Kind::extend;
      c.added = candidate.length();
    }
    return c;
  }
  ChainNode::Ptr fork = common_ancestor(current.tip(), candidate.tip());
  if (!fork) {
    c.kind = Choice::Kind::invalid;
    return c;
  }
  if (fork == candidate.tip()) return c;  // nothing new
  if (fork == current.tip()) {
    c.kind = Choice::Kind::extend;
    c.added = candidate.tip()->height() - fork->height();
    return c;
  }
  BigInt removed = current.tip()->total_difficulty() - fork->total_difficulty();
  BigInt offered = candidate.tip()->total_difficulty() - fork->total_difficulty();
  numerics::Rat threshold = (numerics::Rat(1) + params.epsilon) * numerics::Rat(removed);
  if (!(numerics::Rat(offered) > threshold)) return c;
  std::uint64_t depth = current.tip()->height() - fork->height();
  if (params.checkpoint != 0 && depth > params.checkpoint) {
    c.kind = Choice::Kind::below_checkpoint;
    c.depth = depth;
    return c;
  }
  c.kind = Choice::Kind::replace;
  c.depth = depth;
  c.added = candidate.tip()->height() - fork->height();
  return c;
}

}  // namespace nakamoto::consensus
