#pragma once

// Exact rationals with meadow semantics: division is total and 0^-1 = 0.
//
// Values are always normalized: the denominator is positive, numerator and
// denominator are coprime, and zero is 0/1. Every operation returns a
// normalized value, so structural equality is numeric equality.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace nakamoto::numerics {

using BigInt = boost::multiprecision::cpp_int;

class Rat {
 public:
  Rat() = default;
  Rat(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  explicit Rat(BigInt n) : num_(std::move(n)) {}
  /// num/den; a zero denominator yields 0, as meadow division does.
  Rat(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  /// Meadow inverse: 0 maps to 0.
  Rat inverse() const;
  Rat abs() const;

  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  Rat operator-() const;

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

  /// floor(num/den)
  BigInt floor() const;

  /// Canonical text: `num/den`, with `/den` omitted when den is 1.
  std::string str() const;
  double to_double() const;

  /// Accepts canonical text (`-3/4`, `7`) and decimals (`3.4`, `1e-8`).
  static Rat parse(std::string_view text);
  /// Exact value of a finite double (dyadic rational).
  static Rat from_double(double v);
  /// 10^exp for any signed exponent.
  static Rat pow10(int exp);
  /// 2^exp for any signed exponent.
  static Rat pow2(int exp);

 private:
  void normalize();

  BigInt num_{0};
  BigInt den_{1};
};

/// Total division: x / 0 = 0.
Rat meadow_div(const Rat& x, const Rat& y);

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace nakamoto::numerics
