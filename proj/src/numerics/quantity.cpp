#include "nakamoto/numerics/quantity.hpp"

#include <ostream>

namespace nakamoto::numerics {

namespace {

std::string describe(const Dimension& d) {
  return d.dimensionless() ? std::string("dimensionless") : d.str();
}

void require_same(const Dimension& expected, const Dimension& got) {
  if (!(expected == got)) throw DimensionMismatch(expected, got);
}

}  // namespace

DimensionMismatch::DimensionMismatch(Dimension expected, Dimension got)
    : std::runtime_error("dimension mismatch: expected " + describe(expected) + ", got " +
                         describe(got)),
      expected_(std::move(expected)),
      got_(std::move(got)) {}

Quantity& Quantity::operator+=(const Quantity& o) {
  require_same(dim, o.dim);
  value += o.value;
  return *this;
}

Quantity& Quantity::operator-=(const Quantity& o) {
  require_same(dim, o.dim);
  value -= o.value;
  return *this;
}

Quantity& Quantity::operator*=(const Quantity& o) {
  value *= o.value;
  dim = dim * o.dim;
  return *this;
}

Quantity& Quantity::operator/=(const Quantity& o) {
  value = meadow_div(value, o.value);
  dim = dim / o.dim;
  return *this;
}

std::strong_ordering Quantity::compare(const Quantity& o) const {
  require_same(dim, o.dim);
  return value <=> o.value;
}

std::string Quantity::str() const {
  if (dim.dimensionless()) return value.str();
  return value.str() + " " + dim.str();
}

Quantity Quantity::parse(std::string_view text) {
  std::size_t b = text.find_first_not_of(" \t");
  if (b == std::string_view::npos) throw std::invalid_argument("empty quantity");
  text = text.substr(b);
  std::size_t sp = text.find_first_of(" \t");
  if (sp == std::string_view::npos) return Quantity(Rat::parse(text));
  return Quantity(Rat::parse(text.substr(0, sp)), Dimension::parse(text.substr(sp + 1)));
}

std::ostream& operator<<(std::ostream& os, const Quantity& q) { return os << q.str(); }

}  // namespace nakamoto::numerics
