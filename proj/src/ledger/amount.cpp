#include "nakamoto/ledger/amount.hpp"

#include <limits>
#include <ostream>

namespace nakamoto::ledger {

using numerics::BigInt;
using numerics::Rat;

Amount& Amount::operator+=(const Amount& o) {
  if (o.q_ > std::numeric_limits<Quanta>::max() - q_) throw AmountError("amount overflow");
  q_ += o.q_;
  return *this;
}

Amount& Amount::operator-=(const Amount& o) {
  if (o.q_ > q_) throw AmountError("amount would become negative");
  q_ -= o.q_;
  return *this;
}

Amount Amount::operator*(std::uint64_t k) const {
  if (k != 0 && q_ > std::numeric_limits<Quanta>::max() / k) throw AmountError("amount overflow");
  return Amount(Quanta(q_ * k));
}

std::string Amount::str() const { return q_.str(); }

Rat Amount::to_rat() const { return Rat(BigInt(q_)); }

numerics::Quantity Amount::to_quantity(const Rat& quantum, std::string_view unit) const {
  return {to_rat() * quantum, unit};
}

Amount Amount::from_units(const Rat& units, const Rat& quantum) {
  Rat q = numerics::meadow_div(units, quantum);
  if (q.sign() < 0 || !q.is_integer()) throw AmountError(units.str() + " is not a whole number of quanta");
  if (q.num() > BigInt(std::numeric_limits<Quanta>::max())) throw AmountError("amount overflow");
  return Amount(static_cast<Quanta>(q.num()));
}

Amount Amount::parse(std::string_view text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string_view::npos)
    throw AmountError("invalid amount '" + std::string(text) + "'");
  BigInt v(std::string{text});
  if (v > BigInt(std::numeric_limits<Quanta>::max())) throw AmountError("amount overflow");
  return Amount(static_cast<Quanta>(v));
}

std::ostream& operator<<(std::ostream& os, const Amount& a) { return os << a.str(); }

}  // namespace nakamoto::ledger
