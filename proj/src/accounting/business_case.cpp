#include "nakamoto/accounting/business_case.hpp"

namespace nakamoto::accounting {

OperatingCase operating_case(const Quantity& yield_rate, const Quantity& cost_rate) {
  OperatingCase c;
  c.pass = cost_rate.compare(yield_rate) <= 0;
  c.productivity = yield_rate / cost_rate;
  return c;
}

bool replacement_case(const Quantity& write_off, const Quantity& yield_rate, const Quantity& equipment_cost) {
  return (write_off * yield_rate).compare(equipment_cost) >= 0;
}

bool improvement_case(const Quantity& write_off, const Quantity& old_rate, const Quantity& new_rate,
                      const Quantity& old_cost, const Quantity& new_cost) {
  return (write_off * (new_rate - old_rate)).compare(new_cost - old_cost) >= 0;
}

}  // namespace nakamoto::accounting
