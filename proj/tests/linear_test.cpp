#include <gtest/gtest.h>

#include <random>

#include "bgg/sym/errors.hpp"
#include "bgg/sym/expr.hpp"
#include "bgg/sym/linear.hpp"

namespace bgg::sym {
namespace {

RatExpr P(const char* s) { return parse_rat(s); }

Vector multiply(const Matrix& a, const Vector& x) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) out[i] += a[i][j] * x[j];
  return out;
}

TEST(SolveLinear, SymbolicSystemSatisfiesEquations) {
  Matrix a{{P("x"), P("y"), P("1")}, {P("1"), P("q"), P("x*y")}, {P("p"), P("0"), P("z + 1")}};
  Vector b{P("1"), P("0"), P("x - z")};
  Vector x = solve_linear(a, b);
  Vector ax = multiply(a, x);
  for (std::size_t i = 0; i < b.size(); ++i) EXPECT_EQ(ax[i], b[i]);
}

TEST(SolveLinear, RandomRationalSystems) {
  std::mt19937_64 g(7);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix a(4, Vector(4));
    Vector b(4);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) a[i][j] = RatExpr(d(g)) + (i == j ? RatExpr(11) : RatExpr(0));
      b[i] = RatExpr(d(g));
    }
    Vector x = solve_linear(a, b);
    EXPECT_EQ(multiply(a, x), b);
  }
}

TEST(SolveLinear, SqrtCoefficients) {
  Matrix a{{P("sqrt(2)"), P("1")}, {P("1"), P("sqrt(3)*x")}};
  Vector b{P("1"), P("sqrt(6)")};
  Vector x = solve_linear(a, b);
  EXPECT_EQ(multiply(a, x), b);
}

TEST(SolveLinear, HiddenZeroIsNotAPivot) {
  // The (0,0) entry is identically zero but not in normal form.
  Matrix a{{P("sin(x)^2 + cos(x)^2 - 1"), P("1")}, {P("1"), P("x")}};
  Vector b{P("2"), P("3")};
  Vector x = solve_linear(a, b);
  EXPECT_TRUE(is_zero(x[1] - 2).zero);
  EXPECT_TRUE(is_zero(x[0] - (3 - 2 * RatExpr::var("x"))).zero);
}

TEST(SolveLinear, SingularReportsColumn) {
  Matrix a{{P("x"), P("y")}, {P("2*x"), P("2*y")}};
  try {
    solve_linear(a, Vector{P("1"), P("0")});
    FAIL();
  } catch (const SingularMatrix& e) {
    EXPECT_EQ(e.column(), 1u);
  }
}

TEST(Nullspace, RationalMatrix) {
  std::vector<QVector> rows{{1, 2, 3}, {2, 4, 6}, {1, 0, -1}};
  auto ns = rational_nullspace(rows, 3);
  ASSERT_EQ(ns.size(), 1u);
  for (const auto& r : rows) {
    mpq_class dot = 0;
    for (int j = 0; j < 3; ++j) dot += r[j] * ns[0][j];
    EXPECT_EQ(dot, 0);
  }
  EXPECT_EQ(rational_rank(rows, 3), 2u);
}

TEST(Nullspace, PolynomialCoefficientsSplitByMonomial) {
  // c0 * x + c1 * (x + y) + c2 * y = 0 identically.
  std::vector<Vector> coeffs{{P("x"), P("x + y"), P("y")}};
  auto ns = poly_nullspace(coeffs, {});
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_EQ(ns[0][0], ns[0][2]);
  EXPECT_EQ(ns[0][1], -ns[0][0]);
}

TEST(Nullspace, DeclaredDenominatorsAreCleared) {
  std::vector<Vector> coeffs{{P("1/(1 + x)"), P("x/(1 + x)"), P("1")}};
  Poly den = P("1 + x").num();
  auto ns = poly_nullspace(coeffs, {den});
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_THROW(poly_nullspace(coeffs, {}), NonPolynomialRow);
}

TEST(Nullspace, LinearFormRows) {
  GenId a = variable("a"), b = variable("b");
  ParseOptions o;
  o.chart = {"x", "a", "b"};
  std::vector<RatExpr> r2{parse_rat("a*x + b*x^2", o), parse_rat("a - b*x", o)};
  auto ns = poly_nullspace(r2, {a, b}, {});
  EXPECT_TRUE(ns.empty());
}

TEST(Nullspace, MonomialCap) {
  std::vector<Vector> coeffs{{P("x^3 + y^3 + x*y + 1"), P("z + p + q")}};
  EXPECT_THROW(poly_nullspace(coeffs, {}, 3), MonomialCapExceeded);
}

}  // namespace
}  // namespace bgg::sym
