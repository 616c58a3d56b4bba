#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "nakamoto/numerics/dimension.hpp"
#include "nakamoto/numerics/rat.hpp"

namespace nakamoto::numerics {

class DimensionMismatch : public std::runtime_error {
 public:
  DimensionMismatch(Dimension expected, Dimension got);
  const Dimension& expected() const { return expected_; }
  const Dimension& got() const { return got_; }

 private:
  Dimension expected_;
  Dimension got_;
};

/// An exact amount tagged with its dimension. Addition, subtraction and
/// comparison require equal dimensions; products and quotients combine them.
struct Quantity {
  Rat value;
  Dimension dim;

  Quantity() = default;
  Quantity(Rat v, Dimension d = {}) : value(std::move(v)), dim(std::move(d)) {}  // NOLINT
  Quantity(Rat v, std::string_view unit) : value(std::move(v)), dim(Dimension::parse(unit)) {}

  Quantity& operator+=(const Quantity& o);
  Quantity& operator-=(const Quantity& o);
  Quantity& operator*=(const Quantity& o);
  /// Meadow quotient: dividing by a zero-valued quantity yields 0 in the
  /// combined dimension.
  Quantity& operator/=(const Quantity& o);

  friend Quantity operator+(Quantity a, const Quantity& b) { return a += b; }
  friend Quantity operator-(Quantity a, const Quantity& b) { return a -= b; }
  friend Quantity operator*(Quantity a, const Quantity& b) { return a *= b; }
  friend Quantity operator/(Quantity a, const Quantity& b) { return a /= b; }
  Quantity operator-() const { return {-value, dim}; }
  Quantity inverse() const { return {value.inverse(), dim.inverse()}; }

  friend bool operator==(const Quantity&, const Quantity&) = default;
  /// Throws DimensionMismatch on unequal dimensions.
  std::strong_ordering compare(const Quantity& o) const;

  /// `<rat>` or `<rat> <unit-expr>`.
  std::string str() const;
  static Quantity parse(std::string_view text);
};

std::ostream& operator<<(std::ostream& os, const Quantity& q);

}  // namespace nakamoto::numerics
