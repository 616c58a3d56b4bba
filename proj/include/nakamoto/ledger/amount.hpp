#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "nakamoto/numerics/quantity.hpp"

namespace nakamoto::ledger {

using Quanta = boost::multiprecision::uint128_t;

class AmountError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Non-negative whole number of quanta. Subtraction below zero and overflow
/// throw AmountError instead of wrapping.
class Amount {
 public:
  constexpr Amount() = default;
  constexpr Amount(std::uint64_t q) : q_(q) {}  // NOLINT(google-explicit-constructor)
  explicit Amount(Quanta q) : q_(q) {}

  const Quanta& quanta() const { return q_; }
  bool is_zero() const { return q_ == 0; }

  Amount& operator+=(const Amount& o);
  Amount& operator-=(const Amount& o);
  friend Amount operator+(Amount a, const Amount& b) { return a += b; }
  friend Amount operator-(Amount a, const Amount& b) { return a -= b; }
  Amount operator*(std::uint64_t k) const;

  friend bool operator==(const Amount&, const Amount&) = default;
  friend std::strong_ordering operator<=>(const Amount& a, const Amount& b) {
    return a.q_ < b.q_ ? std::strong_ordering::less
                       : (a.q_ == b.q_ ? std::strong_ordering::equal : std::strong_ordering::greater);
  }

  std::string str() const;
  numerics::Rat to_rat() const;
  /// Value in units: quanta * quantum, tagged with `unit`.
  numerics::Quantity to_quantity(const numerics::Rat& quantum, std::string_view unit) const;
  /// Exact conversion of a unit count to quanta; throws when the value is
  /// negative or not a whole number of quanta.
  static Amount from_units(const numerics::Rat& units, const numerics::Rat& quantum);
  static Amount parse(std::string_view decimal_quanta);

 private:
  Quanta q_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Amount& a);

}  // namespace nakamoto::ledger
