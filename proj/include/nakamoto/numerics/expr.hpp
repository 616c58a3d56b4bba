#pragma once

// Rational expressions with free variables, for money-of-account formulas.
//
// Grammar (whitespace insignificant):
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | primary
//   primary := integer | identifier | 'inv' '(' expr ')' | '(' expr ')'
//
// `/` binds like `*` and both are left-associative. Identifiers match
// [A-Za-z_][A-Za-z0-9_]*; `inv` is reserved for the meadow inverse. There is
// no rational literal: `2/3` is Div(2, 3), and Expr::constant() builds that
// shape for non-natural constants so that every tree prints to text that
// parses back to the same tree.

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "nakamoto/numerics/quantity.hpp"
#include "nakamoto/numerics/rat.hpp"

namespace nakamoto::numerics {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::set<std::string> expected);
  std::size_t offset() const { return offset_; }
  const std::set<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::set<std::string> expected_;
};

class UnboundVariable : public std::runtime_error {
 public:
  explicit UnboundVariable(std::string name);
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class Expr {
 public:
  enum class Kind { constant, variable, negate, inverse, add, sub, mul, div };

  /// Naturals become a constant leaf; other rationals expand to Neg/Div.
  static Expr constant(const Rat& value);
  static Expr variable(std::string name);
  static Expr negate(Expr e);
  static Expr inverse(Expr e);
  static Expr add(Expr a, Expr b);
  static Expr sub(Expr a, Expr b);
  static Expr mul(Expr a, Expr b);
  static Expr div(Expr a, Expr b);

  Kind kind() const;
  /// Natural number held by a constant leaf.
  const BigInt& natural() const;
  const std::string& name() const;
  const Expr& operand() const;
  const Expr& lhs() const;
  const Expr& rhs() const;

  std::set<std::string> free_variables() const;
  std::string str() const;

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

Expr parse_expr(std::string_view text);

using Env = std::map<std::string, Quantity, std::less<>>;

/// Exact evaluation; constants are dimensionless. Throws UnboundVariable or
/// DimensionMismatch.
Quantity eval_expr(const Expr& e, const Env& env);

}  // namespace nakamoto::numerics
