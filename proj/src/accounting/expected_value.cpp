#include "nakamoto/accounting/expected_value.hpp"

#include <stdexcept>

namespace nakamoto::accounting {

using numerics::Rat;

ExpectedValue expected_value(const Rat& p_success, const numerics::Quantity& world_money, const Rat& supply) {
  if (p_success < Rat(0) || p_success > Rat(1)) throw std::invalid_argument("success probability must lie in [0, 1]");
  if (supply < Rat(0)) throw std::invalid_argument("supply must be non-negative");
  return {numerics::Quantity(p_success) * world_money / numerics::Quantity(supply), supply.is_zero()};
}

}  // namespace nakamoto::accounting
