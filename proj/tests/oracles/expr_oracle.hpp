#pragma once

// Straight-line interpreter for infix rational expressions, kept apart from
// the library parser: text is compiled by shunting-yard into a flat postfix
// program and run on a value stack of boost cpp_rational.

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nakamoto/numerics/rat.hpp"

namespace nakamoto::oracle {

using OracleRat = boost::multiprecision::cpp_rational;
using OracleEnv = std::map<std::string, OracleRat>;

inline OracleRat to_oracle(const numerics::Rat& r) { return OracleRat(r.num(), r.den()); }

struct Instr {
  enum Op { push_const, push_var, neg, inv, add, sub, mul, div } op;
  OracleRat value;
  std::string name;
};

inline std::vector<Instr> compile(const std::string& text) {
  enum Tok { num, ident, op, lparen, rparen, call };
  struct T {
    Tok kind;
    std::string s;
  };
  std::vector<T> toks;
  for (std::size_t i = 0; i < text.size();) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      toks.push_back({num, text.substr(i, j - i)});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      std::string id = text.substr(i, j - i);
      toks.push_back({id == "inv" ? call : ident, id});
      i = j;
    } else if (c == '(') {
      toks.push_back({lparen, "("});
      ++i;
    } else if (c == ')') {
      toks.push_back({rparen, ")"});
      ++i;
    } else {
      toks.push_back({op, std::string(1, c)});
      ++i;
    }
  }

  // Operator stack entries: "+", "-", "*", "/", "~" (negate), "inv", "(".
  auto prec = [](const std::string& o) {
    if (o == "+" || o == "-") return 1;
    if (o == "*" || o == "/") return 2;
    return 3;
  };
  auto emit = [](std::vector<Instr>& out, const std::string& o) {
    if (o == "+") out.push_back({Instr::add, {}, {}});
    else if (o == "-") out.push_back({Instr::sub, {}, {}});
    else if (o == "*") out.push_back({Instr::mul, {}, {}});
    else if (o == "/") out.push_back({Instr::div, {}, {}});
    else if (o == "~") out.push_back({Instr::neg, {}, {}});
    else if (o == "inv") out.push_back({Instr::inv, {}, {}});
    else throw std::logic_error("oracle: bad operator " + o);
  };

  std::vector<Instr> out;
  std::vector<std::string> ops;
  bool expect_operand = true;
  for (const auto& t : toks) {
    switch (t.kind) {
      case num:
        out.push_back({Instr::push_const, OracleRat(boost::multiprecision::cpp_int(t.s)), {}});
        expect_operand = false;
        break;
      case ident:
        out.push_back({Instr::push_var, {}, t.s});
        expect_operand = false;
        break;
      case call:
        ops.push_back("inv");
        break;
      case lparen:
        ops.push_back("(");
        expect_operand = true;
        break;
      case rparen:
        while (!ops.empty() && ops.back() != "(") {
          emit(out, ops.back());
          ops.pop_back();
        }
        if (ops.empty()) throw std::runtime_error("oracle: unbalanced");
        ops.pop_back();
        if (!ops.empty() && ops.back() == "inv") {
          emit(out, "inv");
          ops.pop_back();
        }
        expect_operand = false;
        break;
      case op:
        if (expect_operand && t.s == "-") {
          ops.push_back("~");  // prefix, right-associative: never pops
          break;
        }
        while (!ops.empty() && ops.back() != "(" && ops.back() != "inv" && prec(ops.back()) >= prec(t.s)) {
          emit(out, ops.back());
          ops.pop_back();
        }
        ops.push_back(t.s);
        expect_operand = true;
        break;
    }
  }
  while (!ops.empty()) {
    emit(out, ops.back());
    ops.pop_back();
  }
  return out;
}

inline OracleRat run(const std::vector<Instr>& program, const OracleEnv& env) {
  std::vector<OracleRat> st;
  auto pop = [&] {
    OracleRat v = st.back();
    st.pop_back();
    return v;
  };
  for (const auto& in : program) {
    switch (in.op) {
      case Instr::push_const: st.push_back(in.value); break;
      case Instr::push_var: st.push_back(env.at(in.name)); break;
      case Instr::neg: st.push_back(-pop()); break;
      case Instr::inv: {
        OracleRat x = pop();
        st.push_back(x == 0 ? OracleRat(0) : OracleRat(1) / x);
        break;
      }
      default: {
        OracleRat b = pop(), a = pop();
        if (in.op == Instr::add) st.push_back(a + b);
        else if (in.op == Instr::sub) st.push_back(a - b);
        else if (in.op == Instr::mul) st.push_back(a * b);
        else st.push_back(b == 0 ? OracleRat(0) : a / b);
      }
    }
  }
  if (st.size() != 1) throw std::runtime_error("oracle: malformed program");
  return st.back();
}

}  // namespace nakamoto::oracle
