#include <gtest/gtest.h>

#include <random>

#include "bgg/sym/errors.hpp"
#include "bgg/sym/eval.hpp"
#include "bgg/sym/expr.hpp"

namespace bgg::sym {
namespace {

RatExpr P(const char* s) { return parse_rat(s); }

// Random expressions in x and y without real poles.
class ExprGen {
 public:
  explicit ExprGen(std::uint64_t seed) : g_(seed) {}

  RatExpr operator()(int depth) {
    std::uniform_int_distribution<int> pick(0, depth == 0 ? 2 : 9);
    switch (pick(g_)) {
      case 0: return RatExpr::var("x");
      case 1: return RatExpr::var("y");
      case 2: return RatExpr(mpq_class(small(), 1 + std::abs(small())));
      case 3: return (*this)(depth - 1) + (*this)(depth - 1);
      case 4: return (*this)(depth - 1) - (*this)(depth - 1);
      case 5: return (*this)(depth - 1) * (*this)(depth - 1);
      case 6: {
        RatExpr d = (*this)(depth - 1);
        return (*this)(depth - 1) / (RatExpr(1) + d * d);
      }
      case 7: return (*this)(depth - 1).pow(2);
      case 8: return apply(Func::Exp, (*this)(depth - 1) * RatExpr(mpq_class(1, 4)));
      default: return apply(Func::Sin, (*this)(depth - 1));
    }
  }

 private:
  int small() { return std::uniform_int_distribution<int>(-3, 3)(g_); }
  std::mt19937_64 g_;
};

Real value(const RatExpr& e, const mpq_class& x, const mpq_class& y) {
  return to_real(eval_at(e, Point::make({variable("x"), variable("y")}, {x, y})));
}

TEST(Parser, PrintRoundTrip) {
  for (const char* s : {"q^2 - p^4/(x+y)^2 - 14*p^3/(3*(x+y)^2) + 2*p*z/(x+y)", "exp(q/sqrt(10))",
                        "sin(x)*cos(y) - tan(p)", "(1 + sqrt(2))/(x - sqrt(3))", "log(1 + x^2)"}) {
    RatExpr e = P(s);
    EXPECT_EQ(parse_rat(to_string(e)), e) << s;
  }
}

TEST(Parser, NormalFormCancels) {
  EXPECT_EQ(P("(x^2 - y^2)/(x - y)"), P("x + y"));
  EXPECT_EQ(P("sqrt(2)*sqrt(2)"), P("2"));
  EXPECT_EQ(P("sqrt(8)"), P("2*sqrt(2)"));
  EXPECT_EQ(to_string(P("sqrt(2)*sqrt(5)")), "sqrt(10)");
  EXPECT_EQ(P("1/(1 + sqrt(2))"), P("sqrt(2) - 1"));
  EXPECT_EQ(P("exp(0)"), P("1"));
}

TEST(Parser, Errors) {
  EXPECT_THROW(P("q^^2"), ParseError);
  EXPECT_THROW(P("w + 1"), UnknownIdentifier);
  EXPECT_THROW(P("1/(x - x)"), DivisionByZero);
  try {
    P("x + (y");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_GT(e.position(), 0u);
  }
}

TEST(Parser, OpaqueSymbols) {
  ParseOptions o;
  o.functions = {"s"};
  o.fields = {"g"};
  RatExpr e = parse_rat("s(q)*g", o);
  RatExpr d = diff(e, variable("q"));
  EXPECT_FALSE(d.is_zero());
  EXPECT_NE(d, e);
}

TEST(Diff, MatchesCentralDifference) {
  ExprGen gen(11);
  const mpq_class h(1, mpz_class("100000000000000000000"));
  int checked = 0;
  for (int k = 0; k < 40; ++k) {
    RatExpr e = gen(3);
    RatExpr d = diff(e, variable("x"));
    mpq_class x(3, 7), y(-5, 11);
    Real fd = (value(e, x + h, y) - value(e, x - h, y)) / Real("2e-20");
    Real exact = value(d, x, y);
    EXPECT_LT(abs(fd - exact), Real("1e-25") * (1 + abs(exact))) << to_string(e);
    ++checked;
  }
  EXPECT_EQ(checked, 40);
}

TEST(Diff, MixedPartialsCommute) {
  ExprGen gen(23);
  GenId x = variable("x"), y = variable("y");
  for (int k = 0; k < 40; ++k) {
    RatExpr e = gen(3);
    RatExpr dxy = diff(diff(e, x), y);
    RatExpr dyx = diff(diff(e, y), x);
    EXPECT_TRUE(is_zero(dxy - dyx).zero) << to_string(e);
  }
}

TEST(Diff, KnownDerivatives) {
  GenId q = variable("q");
  EXPECT_EQ(diff(P("exp(q)"), q, 4), P("exp(q)"));
  EXPECT_EQ(diff(P("sin(q)"), q, 2), P("-sin(q)"));
  EXPECT_EQ(diff(P("log(q)"), q), P("1/q"));
  EXPECT_EQ(diff(P("x^3*q^2"), q), P("2*x^3*q"));
  EXPECT_EQ(P("tanh(q)"), P("sinh(q)/cosh(q)"));
  EXPECT_EQ(P("coth(q)*tanh(q)"), P("1"));
}

TEST(Subst, CommutesWithEvaluation) {
  ExprGen gen(31);
  GenId x = variable("x");
  for (int k = 0; k < 30; ++k) {
    RatExpr e = gen(3);
    mpq_class xv(2, 3), yv(1, 5);
    RatExpr s = subst(e, {{x, RatExpr(xv)}});
    Real a = to_real(eval_at(s, Point::make({variable("y")}, {yv})));
    Real b = value(e, xv, yv);
    EXPECT_LT(abs(a - b), Real("1e-50") * (1 + abs(b))) << to_string(e);
  }
}

TEST(Subst, ReplacesInsideAtoms) {
  GenId q = variable("q");
  EXPECT_EQ(subst(P("x*q + exp(q)"), {{q, P("x + 1")}}), P("x^2 + x + exp(x + 1)"));
}

TEST(ZeroTest, ExactAndProbabilistic) {
  ZeroVerdict a = is_zero(P("(x + 1)^2 - x^2 - 2*x - 1"));
  EXPECT_TRUE(a.zero);
  EXPECT_FALSE(a.probabilistic);

  ZeroVerdict b = is_zero(P("sin(q)^2 + cos(q)^2 - 1"));
  EXPECT_TRUE(b.zero);
  EXPECT_TRUE(b.probabilistic);

  EXPECT_FALSE(is_zero(P("exp(q) - 1 - q")).zero);
  EXPECT_FALSE(is_zero(P("x - y")).zero);
}

TEST(ZeroTest, DeterministicForSeed) {
  RatExpr e = P("exp(q)*exp(x) - exp(q + x)");
  ZeroTestOptions o;
  o.seed = 99;
  EXPECT_EQ(is_zero(e, {}, o).zero, is_zero(e, {}, o).zero);
}

TEST(Eval, PolesAndDomains) {
  GenId x = variable("x");
  EXPECT_THROW(eval_at(P("1/x"), Point::make({x}, {0})), PoleAtPoint);
  EXPECT_THROW(eval_at(P("log(x)"), Point::make({x}, {-1})), DomainError);
  Number n = eval_at(P("x^2/3"), Point::make({x}, {3}));
  ASSERT_TRUE(std::holds_alternative<mpq_class>(n));
  EXPECT_EQ(std::get<mpq_class>(n), 3);
}

}  // namespace
}  // namespace bgg::sym
