#include <gtest/gtest.h>

#include <random>

#include "bgg/g2/g2.hpp"
#include "bgg/sym/errors.hpp"
#include "bgg/sym/expr.hpp"

namespace bgg::g2 {
namespace {

Params random_params(std::mt19937_64& g) {
  std::uniform_int_distribution<int> d(-4, 4);
  auto r = [&] { return RatExpr(mpq_class(d(g), 1 + std::abs(d(g)))); };
  Params p;
  for (auto& row : p.a)
    for (auto& e : row) e = r();
  for (int i = 0; i < 2; ++i) {
    p.x[i] = r();
    p.y[i] = r();
    p.z[i] = r();
    p.w[i] = r();
  }
  p.r = r();
  p.s = r();
  return p;
}

V7 random_v(std::mt19937_64& g) {
  std::uniform_int_distribution<int> d(-5, 5);
  V7 v;
  for (auto& e : v.v) e = RatExpr(d(g));
  return v;
}

const Check* find(const Report& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

TEST(G2, StructureVerifies) {
  Report r = verify_structure();
  for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.name << ": " << c.detail;
  EXPECT_TRUE(r.all_pass());
  for (const char* name : {"closure", "grading", "duality", "levi_bracket", "action_table",
                           "jacobi", "representation", "pairing_invariance"})
    EXPECT_NE(find(r, name), nullptr) << name;
}

TEST(G2, ReportIsDeterministic) {
  Report a = verify_structure(), b = verify_structure();
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_EQ(a.checks[i].name, b.checks[i].name);
    EXPECT_EQ(a.checks[i].detail, b.checks[i].detail);
  }
}

TEST(G2, PerturbedMatrixIsDetected) {
  VerifyOptions o;
  o.perturb = Perturbation{1, 1, RatExpr(1)};
  Report r = verify_structure(o);
  EXPECT_FALSE(r.all_pass());
  const Check* table = find(r, "action_table");
  ASSERT_NE(table, nullptr);
  EXPECT_FALSE(table->pass);
}

TEST(G2, ZeroParametersGiveZeroMatrix) {
  Matrix7 m = realize(Params{});
  for (const auto& row : m)
    for (const auto& e : row) EXPECT_TRUE(e.is_zero());
}

TEST(G2, ParametrizeInvertsRealize) {
  std::mt19937_64 g(3);
  for (int k = 0; k < 5; ++k) {
    Params p = random_params(g);
    EXPECT_EQ(parametrize(realize(p)), p);
  }
  Matrix7 m = realize(Params{});
  m[0][6] = RatExpr(1);
  EXPECT_THROW(parametrize(m), bgg::ClosureFailure);
}

TEST(G2, GradesAddUnderBracket) {
  std::mt19937_64 g(5);
  G2Element x(random_params(g)), y(random_params(g));
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      G2Element c = bracket(grade_project(x, a), grade_project(y, b));
      for (int k = -3; k <= 3; ++k)
        if (k != a + b) EXPECT_EQ(grade_project(c, k), G2Element()) << a << " " << b << " " << k;
    }
  G2Element sum;
  for (int a = -3; a <= 3; ++a) sum = sum + grade_project(x, a);
  EXPECT_EQ(sum, x);
}

TEST(G2, EntryGrades) {
  EXPECT_EQ(entry_grade(0, 0), 0);
  EXPECT_FALSE(entry_grade(0, 6).has_value());
  EXPECT_FALSE(entry_grade(6, 0).has_value());
  EXPECT_FALSE(entry_grade(3, 3).has_value());
  EXPECT_EQ(entry_grade(1, 0), -1);
  EXPECT_EQ(entry_grade(0, 1), 1);
}

TEST(G2, TableMatchesMatrixAction) {
  std::mt19937_64 g(9);
  for (int k = 0; k < 5; ++k) {
    Params p = random_params(g);
    V7 v = random_v(g);
    EXPECT_EQ(table_action(p, v), act_on_V(G2Element(p), v));
  }
}

TEST(G2, ActionIsARepresentation) {
  std::mt19937_64 g(13);
  for (int k = 0; k < 5; ++k) {
    G2Element x(random_params(g)), y(random_params(g));
    V7 v = random_v(g);
    V7 lhs = act_on_V(bracket(x, y), v);
    V7 rhs = act_on_V(x, act_on_V(y, v)) - act_on_V(y, act_on_V(x, v));
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(G2, PairingIsInvariant) {
  std::mt19937_64 g(17);
  for (int k = 0; k < 5; ++k) {
    G2Element x(random_params(g)), y(random_params(g)), z(random_params(g));
    EXPECT_EQ(pairing(bracket(x, y), z), pairing(x, bracket(y, z)));
    EXPECT_EQ(pairing(x, y), pairing(y, x));
  }
}

TEST(G2, KostantCodiffIsMinusSumOfActions) {
  std::mt19937_64 g(19);
  G2Element a(random_params(g)), b(random_params(g));
  V7 u = random_v(g), v = random_v(g);
  V7 expected = V7{} - act_on_V(a, u) - act_on_V(b, v);
  EXPECT_EQ(kostant_codiff({{a, u}, {b, v}}), expected);
}

}  // namespace
}  // namespace bgg::g2
