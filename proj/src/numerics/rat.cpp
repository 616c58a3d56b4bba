#include "nakamoto/numerics/rat.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include <boost/integer/common_factor_rt.hpp>

namespace nakamoto::numerics {

namespace {

BigInt gcd_abs(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(boost::multiprecision::abs(a),
                                    boost::multiprecision::abs(b));
}

BigInt pow_big(unsigned base, unsigned exp) {
  return boost::multiprecision::pow(BigInt(base), exp);
}

}  // namespace

Rat::Rat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void Rat::normalize() {
  if (den_.is_zero() || num_.is_zero()) {
    num_ = 0;
    den_ = 1;
    return;
  }
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = gcd_abs(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rat Rat::inverse() const {
  if (is_zero()) return {};
  return Rat(den_, num_);
}

Rat Rat::abs() const {
  Rat r = *this;
  if (r.num_.sign() < 0) r.num_ = -r.num_;
  return r;
}

Rat Rat::operator-() const {
  Rat r = *this;
  r.num_ = -r.num_;
  return r;
}

Rat& Rat::operator+=(const Rat& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

Rat& Rat::operator-=(const Rat& o) { return *this += -o; }

Rat& Rat::operator*=(const Rat& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rat& Rat::operator/=(const Rat& o) { return *this *= o.inverse(); }

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BigInt Rat::floor() const {
  BigInt q = num_ / den_;  // truncates toward zero
  if (num_.sign() < 0 && q * den_ != num_) q -= 1;
  return q;
}

std::string Rat::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

double Rat::to_double() const {
  return static_cast<double>(boost::multiprecision::cpp_rational(num_, den_));
}

Rat Rat::pow10(int exp) {
  if (exp >= 0) return Rat(pow_big(10, static_cast<unsigned>(exp)));
  return Rat(BigInt(1), pow_big(10, static_cast<unsigned>(-exp)));
}

Rat Rat::pow2(int exp) {
  if (exp >= 0) return Rat(pow_big(2, static_cast<unsigned>(exp)));
  return Rat(BigInt(1), pow_big(2, static_cast<unsigned>(-exp)));
}

Rat Rat::from_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("Rat::from_double: non-finite value");
  if (v == 0.0) return {};
  int exp = 0;
  double mant = std::frexp(v, &exp);  // v = mant * 2^exp, 0.5 <= |mant| < 1
  // 53 significant bits make the mantissa an exact integer.
  auto m = static_cast<std::int64_t>(std::ldexp(mant, 53));
  return Rat(m) * pow2(exp - 53);
}

Rat Rat::parse(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  };
  std::size_t slash = text.find('/');
  if (slash != std::string_view::npos) {
    Rat n = parse(text.substr(0, slash));
    Rat d = parse(text.substr(slash + 1));
    if (!n.is_integer() || !d.is_integer()) fail();
    return meadow_div(n, d);
  }

  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    neg = text[i] == '-';
    ++i;
  }
  BigInt digits = 0;
  int scale = 0;
  bool any = false;
  bool dot = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c >= '0' && c <= '9') {
      digits = digits * 10 + (c - '0');
      if (dot) --scale;
      any = true;
    } else if (c == '.' && !dot) {
      dot = true;
    } else if (c == 'e' || c == 'E') {
      break;
    } else {
      fail();
    }
  }
  if (!any) fail();
  if (i < text.size()) {
    std::string_view e = text.substr(i + 1);
    if (e.empty()) fail();
    try {
      std::size_t used = 0;
      int ev = std::stoi(std::string(e), &used);
      if (used != e.size()) fail();
      scale += ev;
    } catch (const std::logic_error&) {
      fail();
    }
  }
  Rat r = Rat(neg ? BigInt(-digits) : digits) * pow10(scale);
  return r;
}

Rat meadow_div(const Rat& x, const Rat& y) { return x * y.inverse(); }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace nakamoto::numerics
