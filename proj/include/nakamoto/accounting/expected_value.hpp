#pragma once

#include "nakamoto/numerics/quantity.hpp"

namespace nakamoto::accounting {

struct ExpectedValue {
  numerics::Quantity value;  // per coin, in the unit of world_money
  bool zero_supply = false;  // value is 0 by meadow division, not by estimate
};

/// p * world_money / supply, exact. Throws std::invalid_argument unless
/// 0 <= p <= 1 and supply >= 0.
ExpectedValue expected_value(const numerics::Rat& p_success, const numerics::Quantity& world_money,
                             const numerics::Rat& supply);

}  // namespace nakamoto::accounting
