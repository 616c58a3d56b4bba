#include "nakamoto/numerics/dimension.hpp"

#include <cctype>
#include <stdexcept>

namespace nakamoto::numerics {

Dimension::Dimension(std::string_view symbol, int exponent) {
  add(std::string(symbol), exponent);
}

void Dimension::add(const std::string& symbol, int exponent) {
  if (exponent == 0) return;
  int& e = exps_[symbol];
  e += exponent;
  if (e == 0) exps_.erase(symbol);
}

int Dimension::exponent(const std::string& symbol) const {
  auto it = exps_.find(symbol);
  return it == exps_.end() ? 0 : it->second;
}

Dimension Dimension::operator*(const Dimension& o) const {
  Dimension r = *this;
  for (const auto& [sym, e] : o.exps_) r.add(sym, e);
  return r;
}

Dimension Dimension::operator/(const Dimension& o) const { return *this * o.inverse(); }

Dimension Dimension::pow(int k) const {
  Dimension r;
  for (const auto& [sym, e] : exps_) r.add(sym, e * k);
  return r;
}

std::string Dimension::str() const {
  std::string num;
  std::string den;
  for (const auto& [sym, e] : exps_) {
    if (e > 0) {
      if (!num.empty()) num += '*';
      num += sym;
      if (e != 1) num += '^' + std::to_string(e);
    } else {
      den += '/';
      den += sym;
      if (e != -1) den += '^' + std::to_string(-e);
    }
  }
  if (num.empty() && !den.empty()) num = "1";
  return num + den;
}

Dimension Dimension::parse(std::string_view text) {
  Dimension out;
  std::size_t i = 0;
  int sign = 1;
  bool expect_factor = true;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad unit expression '" + std::string(text) + "' at offset " +
                                std::to_string(i) + ": " + why);
  };
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) return out;
  while (true) {
    skip_ws();
    if (!expect_factor) fail("expected factor");
    if (i < text.size() && text[i] == '1' &&
        (i + 1 == text.size() || !std::isalnum(static_cast<unsigned char>(text[i + 1])))) {
      ++i;  // `1` as the empty product, as in `1/EUR^2`
    } else {
      std::size_t start = i;
      if (i >= text.size() || !(std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        fail("expected unit symbol");
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      std::string sym(text.substr(start, i - start));
      int e = 1;
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws();
        std::size_t es = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == es || (i == es + 1 && !std::isdigit(static_cast<unsigned char>(text[es]))))
          fail("expected exponent");
        e = std::stoi(std::string(text.substr(es, i - es)));
      }
      out.add(sym, sign * e);
    }
    skip_ws();
    if (i == text.size()) break;
    if (text[i] == '*') {
      sign = 1;
    } else if (text[i] == '/') {
      sign = -1;
    } else {
      fail("expected '*' or '/'");
    }
    ++i;
  }
  return out;
}

}  // namespace nakamoto::numerics
