#pragma once

#include <map>
#include <string>
#include <string_view>

namespace nakamoto::numerics {

/// Product of base-unit symbols raised to integer exponents. Symbols are
/// open-ended (BGU, BGUA, FBGU, EUR, U, ...). Zero exponents are never stored,
/// so map equality is dimension equality; the empty map is dimensionless.
class Dimension {
 public:
  Dimension() = default;
  explicit Dimension(std::string_view symbol, int exponent = 1);

  static Dimension none() { return {}; }
  /// Parses a unit expression such as `BGU/U`, `BGUA*BGU^-1`, `1/EUR^2`.
  static Dimension parse(std::string_view text);

  bool dimensionless() const { return exps_.empty(); }
  int exponent(const std::string& symbol) const;
  const std::map<std::string, int>& exponents() const { return exps_; }

  Dimension operator*(const Dimension& o) const;
  Dimension operator/(const Dimension& o) const;
  Dimension pow(int k) const;
  Dimension inverse() const { return pow(-1); }

  friend bool operator==(const Dimension&, const Dimension&) = default;

  /// Canonical unit text: positive factors joined by `*`, then each negative
  /// factor as `/SYM[^k]`; `1/...` when there is no positive factor; empty
  /// when dimensionless.
  std::string str() const;

 private:
  void add(const std::string& symbol, int exponent);

  std::map<std::string, int> exps_;
};

}  // namespace nakamoto::numerics
