#include "nakamoto/numerics/expr.hpp"

#include <cctype>
#include <vector>

namespace nakamoto::numerics {

struct Expr::Node {
  Kind kind;
  BigInt natural;
  std::string name;
  std::vector<Expr> kids;
};

namespace {

std::string join(const std::set<std::string>& items) {
  std::string s;
  for (const auto& i : items) {
    if (!s.empty()) s += ", ";
    s += i;
  }
  return s;
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

ParseError::ParseError(std::size_t offset, std::set<std::string> expected)
    : std::runtime_error("syntax error at offset " + std::to_string(offset) + ", expected one of: " +
                         join(expected)),
      offset_(offset),
      expected_(std::move(expected)) {}

UnboundVariable::UnboundVariable(std::string name)
    : std::runtime_error("unbound variable '" + name + "'"), name_(std::move(name)) {}

Expr Expr::constant(const Rat& value) {
  if (value.sign() < 0) return negate(constant(-value));
  if (!value.is_integer()) return div(constant(Rat(value.num())), constant(Rat(value.den())));
  return Expr(std::make_shared<const Node>(Node{Kind::constant, value.num(), {}, {}}));
}

Expr Expr::variable(std::string name) {
  return Expr(std::make_shared<const Node>(Node{Kind::variable, 0, std::move(name), {}}));
}

Expr Expr::negate(Expr e) {
  return Expr(std::make_shared<const Node>(Node{Kind::negate, 0, {}, {std::move(e)}}));
}

Expr Expr::inverse(Expr e) {
  return Expr(std::make_shared<const Node>(Node{Kind::inverse, 0, {}, {std::move(e)}}));
}

Expr Expr::add(Expr a, Expr b) {
  return Expr(std::make_shared<const Node>(Node{Kind::add, 0, {}, {std::move(a), std::move(b)}}));
}

Expr Expr::sub(Expr a, Expr b) {
  return Expr(std::make_shared<const Node>(Node{Kind::sub, 0, {}, {std::move(a), std::move(b)}}));
}

Expr Expr::mul(Expr a, Expr b) {
  return Expr(std::make_shared<const Node>(Node{Kind::mul, 0, {}, {std::move(a), std::move(b)}}));
}

Expr Expr::div(Expr a, Expr b) {
  return Expr(std::make_shared<const Node>(Node{Kind::div, 0, {}, {std::move(a), std::move(b)}}));
}

Expr::Kind Expr::kind() const { return node_->kind; }
const BigInt& Expr::natural() const { return node_->natural; }
const std::string& Expr::name() const { return node_->name; }

const Expr& Expr::operand() const { return node_->kids.at(0); }
const Expr& Expr::lhs() const { return node_->kids.at(0); }
const Expr& Expr::rhs() const { return node_->kids.at(1); }

bool operator==(const Expr& x, const Expr& y) {
  const Expr::Node* a = x.node_.get();
  const Expr::Node* b = y.node_.get();
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Expr::Kind::constant:
      return a->natural == b->natural;
    case Expr::Kind::variable:
      return a->name == b->name;
    case Expr::Kind::negate:
    case Expr::Kind::inverse:
      return x.operand() == y.operand();
    default:
      return x.lhs() == y.lhs() && x.rhs() == y.rhs();
  }
}

std::set<std::string> Expr::free_variables() const {
  std::set<std::string> out;
  switch (kind()) {
    case Kind::constant:
      break;
    case Kind::variable:
      out.insert(name());
      break;
    case Kind::negate:
    case Kind::inverse:
      out = operand().free_variables();
      break;
    default: {
      out = lhs().free_variables();
      auto r = rhs().free_variables();
      out.insert(r.begin(), r.end());
    }
  }
  return out;
}

namespace {

// Precedence levels used by the printer: a child is parenthesized when its
// level is below what the context requires.
constexpr int kAdditive = 1;
constexpr int kMultiplicative = 2;
constexpr int kUnary = 3;

int level(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::add:
    case Expr::Kind::sub:
      return kAdditive;
    case Expr::Kind::mul:
    case Expr::Kind::div:
      return kMultiplicative;
    case Expr::Kind::negate:
      return kUnary;
    default:
      return kUnary + 1;
  }
}

void print(const Expr& e, int required, std::string& out) {
  bool paren = level(e) < required;
  if (paren) out += '(';
  switch (e.kind()) {
    case Expr::Kind::constant:
      out += e.natural().str();
      break;
    case Expr::Kind::variable:
      out += e.name();
      break;
    case Expr::Kind::negate:
      out += '-';
      print(e.operand(), kUnary, out);
      break;
    case Expr::Kind::inverse:
      out += "inv(";
      print(e.operand(), kAdditive, out);
      out += ')';
      break;
    case Expr::Kind::add:
    case Expr::Kind::sub:
      print(e.lhs(), kAdditive, out);
      out += e.kind() == Expr::Kind::add ? " + " : " - ";
      print(e.rhs(), kMultiplicative, out);
      break;
    case Expr::Kind::mul:
    case Expr::Kind::div:
      print(e.lhs(), kMultiplicative, out);
      out += e.kind() == Expr::Kind::mul ? " * " : " / ";
      print(e.rhs(), kUnary, out);
      break;
  }
  if (paren) out += ')';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail({"'+'", "'-'", "'*'", "'/'", "end of input"});
    return e;
  }

 private:
  [[noreturn]] void fail(std::set<std::string> expected) { throw ParseError(pos_, std::move(expected)); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr expr() {
    Expr e = term();
    while (true) {
      if (accept('+')) {
        e = Expr::add(std::move(e), term());
      } else if (accept('-')) {
        e = Expr::sub(std::move(e), term());
      } else {
        return e;
      }
    }
  }

  Expr term() {
    Expr e = unary();
    while (true) {
      if (accept('*')) {
        e = Expr::mul(std::move(e), unary());
      } else if (accept('/')) {
        e = Expr::div(std::move(e), unary());
      } else {
        return e;
      }
    }
  }

  Expr unary() {
    if (accept('-')) return Expr::negate(unary());
    return primary();
  }

  Expr primary() {
    skip_ws();
    static const std::set<std::string> kOperand = {"integer", "identifier", "'('", "'-'"};
    if (pos_ >= text_.size()) fail(kOperand);
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Expr::constant(Rat(BigInt(std::string(text_.substr(start, pos_ - start)))));
    }
    if (is_ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (name == "inv") {
        if (!accept('(')) fail({"'('"});
        Expr inner = expr();
        if (!accept(')')) fail({"')'", "'+'", "'-'", "'*'", "'/'"});
        return Expr::inverse(std::move(inner));
      }
      return Expr::variable(std::move(name));
    }
    if (c == '(') {
      ++pos_;
      Expr inner = expr();
      if (!accept(')')) fail({"')'", "'+'", "'-'", "'*'", "'/'"});
      return inner;
    }
    fail(kOperand);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string Expr::str() const {
  std::string out;
  print(*this, kAdditive, out);
  return out;
}

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

Quantity eval_expr(const Expr& e, const Env& env) {
  switch (e.kind()) {
    case Expr::Kind::constant:
      return Quantity(Rat(e.natural()));
    case Expr::Kind::variable: {
      auto it = env.find(e.name());
      if (it == env.end()) throw UnboundVariable(e.name());
      return it->second;
    }
    case Expr::Kind::negate:
      return -eval_expr(e.operand(), env);
    case Expr::Kind::inverse:
      return eval_expr(e.operand(), env).inverse();
    case Expr::Kind::add:
      return eval_expr(e.lhs(), env) + eval_expr(e.rhs(), env);
    case Expr::Kind::sub:
      return eval_expr(e.lhs(), env) - eval_expr(e.rhs(), env);
    case Expr::Kind::mul:
      return eval_expr(e.lhs(), env) * eval_expr(e.rhs(), env);
    case Expr::Kind::div:
      return eval_expr(e.lhs(), env) / eval_expr(e.rhs(), env);
  }
  return {};
}

}  // namespace nakamoto::numerics
