#include <gtest/gtest.h>

#include <random>

#include "nakamoto/numerics/expr.hpp"
#include "nakamoto/numerics/quantity.hpp"
#include "nakamoto/numerics/rat.hpp"
#include "oracles/expr_oracle.hpp"
#include "oracles/generators.hpp"

using namespace nakamoto::numerics;
using nakamoto::oracle::random_expr;
using nakamoto::oracle::random_rat;

namespace {

bool normalized(const Rat& r) {
  return r.den() > 0 && boost::multiprecision::gcd(boost::multiprecision::abs(r.num()), r.den()) == 1 &&
         (!r.is_zero() || r.den() == 1);
}

}  // namespace

TEST(Rat, MeadowDivision) {
  EXPECT_EQ(meadow_div(1, 0), Rat(0));
  EXPECT_EQ(meadow_div(Rat(2, 3), Rat(4, 5)), Rat(5, 6));
  EXPECT_EQ(Rat(0).inverse(), Rat(0));
  EXPECT_EQ(Rat(7, 0), Rat(0));
}

TEST(Rat, SelfQuotientIsOne) {
  std::mt19937_64 gen(11);
  for (int i = 0; i < 10000; ++i) {
    Rat x = random_rat(gen);
    if (x.is_zero()) continue;
    ASSERT_EQ(meadow_div(x, x), Rat(1)) << x;
  }
}

TEST(Rat, CanonicalText) {
  EXPECT_EQ(Rat(6, -4).str(), "-3/2");
  EXPECT_EQ(Rat(10, 5).str(), "2");
  EXPECT_EQ(Rat::parse("-3/2"), Rat(-3, 2));
  EXPECT_EQ(Rat::parse("3.4"), Rat(17, 5));
  EXPECT_EQ(Rat::parse("1e-8"), Rat::pow10(-8));
  EXPECT_EQ(Rat::parse("12.5"), Rat(25, 2));
  EXPECT_THROW(Rat::parse("1.2.3"), std::invalid_argument);
  EXPECT_THROW(Rat::parse(""), std::invalid_argument);
  EXPECT_EQ(Rat::from_double(0.375), Rat(3, 8));
  EXPECT_EQ(Rat(7, 2).floor(), 3);
  EXPECT_EQ(Rat(-7, 2).floor(), -4);
}

TEST(Rat, MeadowLawsOnRandomSamples) {
  std::mt19937_64 gen(2024);
  for (int i = 0; i < 10000; ++i) {
    Rat x = random_rat(gen), y = random_rat(gen), z = random_rat(gen);
    ASSERT_EQ(x + y, y + x);
    ASSERT_EQ(x * y, y * x);
    ASSERT_EQ((x + y) + z, x + (y + z));
    ASSERT_EQ((x * y) * z, x * (y * z));
    ASSERT_EQ(x * (y + z), x * y + x * z);
    ASSERT_EQ(x.inverse().inverse(), x);
    ASSERT_EQ(x * (x * x.inverse()), x);
    ASSERT_TRUE(normalized(x + y) && normalized(x * y) && normalized(meadow_div(x, y)) &&
                normalized(x - y));
  }
  EXPECT_EQ(Rat(0).inverse(), Rat(0));
}

TEST(Dimension, AlgebraAndText) {
  Dimension bgu("BGU"), u("U");
  EXPECT_EQ((bgu / u).str(), "BGU/U");
  EXPECT_EQ(Dimension::parse("BGU/U"), bgu / u);
  EXPECT_EQ(Dimension::parse("1/EUR^2"), Dimension("EUR", -2));
  EXPECT_EQ(Dimension("EUR", -2).str(), "1/EUR^2");
  EXPECT_TRUE((bgu / bgu).dimensionless());
  EXPECT_EQ((bgu / bgu).exponents().size(), 0u);
  EXPECT_EQ(Dimension::parse("BGUA*BGU^-1"), Dimension("BGUA") / bgu);
  EXPECT_THROW(Dimension::parse("BGU//U"), std::invalid_argument);
}

TEST(Quantity, ArithmeticEnforcesDimensions) {
  Quantity a(3, "BGU"), b(2, "NMC");
  EXPECT_THROW(a + b, DimensionMismatch);
  EXPECT_EQ((a * b).dim, Dimension::parse("BGU*NMC"));
  EXPECT_EQ(Quantity(5, "BGU") / Quantity(0, "U"), Quantity(0, "BGU/U"));
  EXPECT_EQ(Quantity::parse("12.5 BGU/U").str(), "25/2 BGU/U");
  EXPECT_EQ(Quantity::parse("7").str(), "7");
}

TEST(Expr, ParseExamples) {
  Expr e = parse_expr("1/0");
  EXPECT_EQ(e, Expr::div(Expr::constant(1), Expr::constant(0)));
  EXPECT_EQ(eval_expr(e, {}), Quantity(0));

  Env env{{"a", Quantity(4)}, {"b", Quantity(3)}};
  EXPECT_EQ(eval_expr(parse_expr("(a + 2)/b"), env), Quantity(2));

  try {
    parse_expr("1 +");
    FAIL() << "expected a syntax error";
  } catch (const ParseError& err) {
    EXPECT_EQ(err.offset(), 3u);
    EXPECT_TRUE(err.expected().count("integer"));
    EXPECT_TRUE(err.expected().count("identifier"));
  }
  EXPECT_THROW(parse_expr("(1 + 2"), ParseError);
  EXPECT_THROW(parse_expr("1 2"), ParseError);
  EXPECT_THROW(parse_expr("inv 2"), ParseError);
}

TEST(Expr, PrecedenceAndAssociativity) {
  EXPECT_EQ(eval_expr(parse_expr("8 / 4 / 2"), {}), Quantity(1));
  EXPECT_EQ(eval_expr(parse_expr("8 - 4 - 2"), {}), Quantity(2));
  EXPECT_EQ(eval_expr(parse_expr("2 + 3 * 4"), {}), Quantity(14));
  EXPECT_EQ(eval_expr(parse_expr("-2 * -3"), {}), Quantity(6));
  EXPECT_EQ(eval_expr(parse_expr("inv(4) * 2"), {}), Quantity(Rat(1, 2)));
  EXPECT_EQ(eval_expr(parse_expr("inv(0)"), {}), Quantity(0));
  EXPECT_EQ(parse_expr("a - (b - c)").str(), "a - (b - c)");
  EXPECT_EQ(parse_expr("(a - b) - c").str(), "a - b - c");
  EXPECT_EQ(parse_expr("-(a * b)").str(), "-(a * b)");
  EXPECT_EQ(Expr::constant(Rat(-3, 4)).str(), "-(3 / 4)");
}

TEST(Expr, EvaluationWithUnits) {
  Env env{{"q", Quantity(3, "BGU")}, {"v", Quantity(1, "BGUA/BGU")}};
  EXPECT_EQ(eval_expr(parse_expr("q * v"), env), Quantity(3, "BGUA"));

  Env mixed{{"a", Quantity(1, "BGU")}, {"b", Quantity(1, "NMC")}};
  try {
    eval_expr(parse_expr("a + b"), mixed);
    FAIL() << "expected dimension mismatch";
  } catch (const DimensionMismatch& m) {
    EXPECT_EQ(m.expected(), Dimension("BGU"));
    EXPECT_EQ(m.got(), Dimension("NMC"));
  }

  Env ratio{{"e", Quantity(6, "BGU/U")}, {"C", Quantity(2, "BGU/U")}};
  Quantity r = eval_expr(parse_expr("e / C"), ratio);
  EXPECT_EQ(r, Quantity(3));
  EXPECT_TRUE(r.dim.dimensionless());

  try {
    eval_expr(parse_expr("x + 1"), {});
    FAIL();
  } catch (const UnboundVariable& u) {
    EXPECT_EQ(u.name(), "x");
  }
}

TEST(Expr, RoundTripOnGeneratedTrees) {
  std::mt19937_64 gen(99);
  for (int i = 0; i < 1000; ++i) {
    Expr e = random_expr(gen, 5);
    std::string text = e.str();
    ASSERT_EQ(parse_expr(text), e) << text;
  }
}

TEST(Expr, EvaluationAgreesWithStraightLineInterpreter) {
  std::mt19937_64 gen(7);
  std::vector<std::string> vars = {"a", "b", "c"};
  for (int i = 0; i < 1000; ++i) {
    Expr e = random_expr(gen, 6, vars);
    Env env;
    nakamoto::oracle::OracleEnv oracle_env;
    for (const auto& v : vars) {
      Rat x = random_rat(gen);
      env.emplace(v, Quantity(x));
      oracle_env[v] = nakamoto::oracle::to_oracle(x);
    }
    auto program = nakamoto::oracle::compile(e.str());
    auto expected = nakamoto::oracle::run(program, oracle_env);
    Quantity got = eval_expr(e, env);
    ASSERT_EQ(nakamoto::oracle::to_oracle(got.value), expected) << e.str();
  }
}
