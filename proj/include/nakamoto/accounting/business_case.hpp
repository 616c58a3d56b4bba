#pragma once

#include "nakamoto/numerics/quantity.hpp"

namespace nakamoto::accounting {

using numerics::Quantity;

/// Each inequality compares quantities of equal dimension and throws
/// numerics::DimensionMismatch otherwise.
struct OperatingCase {
  bool pass = false;      // cost_rate <= yield_rate
  Quantity productivity;  // yield_rate / cost_rate
};

/// Mining pays its way: operating cost per unit time against expected yield
/// per unit time (both e.g. BGU/U).
OperatingCase operating_case(const Quantity& yield_rate, const Quantity& cost_rate);

/// Like-for-like replacement: write_off * yield_rate >= equipment_cost.
bool replacement_case(const Quantity& write_off, const Quantity& yield_rate, const Quantity& equipment_cost);

/// Upgrade: write_off * (new_rate - old_rate) >= new_cost - old_cost.
bool improvement_case(const Quantity& write_off, const Quantity& old_rate, const Quantity& new_rate,
                      const Quantity& old_cost, const Quantity& new_cost);

}  // namespace nakamoto::accounting
